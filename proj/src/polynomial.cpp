#include "qfv/polynomial.hpp"

#include "qfv/cyclic.hpp"

#include <cctype>

namespace qfv {

namespace {

void strip(Polynomial::Monomial& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    Polynomial run() {
        Polynomial p = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("polynomial \"" + s_ + "\": " + what + " at offset " + std::to_string(i_));
    }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        Polynomial acc;
        bool first = true;
        for (;;) {
            bool negate = false;
            if (eat('-')) negate = true;
            else if (!first && !eat('+')) break;
            else if (first) eat('+');
            Polynomial t = term();
            acc = negate ? acc - t : acc + t;
            first = false;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = unary();
        for (;;) {
            skip();
            if (eat('*')) {
                acc = acc * unary();
            } else if (eat('/')) {
                Polynomial d = power();
                if (d.max_variable() != 0 || d.is_zero()) fail("division by a non-constant or zero");
                acc = acc * Polynomial(Rational(1) / d.terms().begin()->second);
            } else if (i_ < s_.size() && (s_[i_] == '(' || s_[i_] == 'x' || std::isdigit(static_cast<unsigned char>(s_[i_])))) {
                acc = acc * power();  // juxtaposition: 2x1, x1(x2+1)
            } else {
                return acc;
            }
        }
    }

    Polynomial unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = atom();
        if (eat('^')) {
            skip();
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (start == i_) fail("expected an exponent");
            int e = std::stoi(s_.substr(start, i_ - start));
            base = base.pow(e);
        }
        return base;
    }

    Polynomial atom() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            Polynomial inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'x') {
            ++i_;
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (start == i_) fail("expected a variable index");
            int idx = std::stoi(s_.substr(start, i_ - start));
            if (idx < 1) fail("variable indices start at 1");
            return Polynomial::variable(idx);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            return Polynomial(Rational(boost::multiprecision::cpp_int(s_.substr(start, i_ - start))));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

}  // namespace

Polynomial::Polynomial(Rational c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(int index) {
    if (index < 1) throw InputError("variable indices start at 1");
    Polynomial p;
    Monomial m(static_cast<std::size_t>(index), 0);
    m.back() = 1;
    p.terms_.emplace(std::move(m), 1);
    return p;
}

Polynomial Polynomial::parse(const std::string& text) { return Parser(text).run(); }

int Polynomial::max_variable() const {
    int top = 0;
    for (const auto& [m, c] : terms_) top = std::max(top, static_cast<int>(m.size()));
    return top;
}

void Polynomial::add_term(Monomial m, const Rational& c) {
    strip(m);
    auto [it, inserted] = terms_.emplace(std::move(m), c);
    if (!inserted) it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Polynomial Polynomial::substitute(int from, int to) const {
    Polynomial out;
    for (const auto& [key, c] : terms_) {
        Monomial m = key;
        if (from <= static_cast<int>(m.size()) && m[static_cast<std::size_t>(from - 1)] != 0) {
            int e = m[static_cast<std::size_t>(from - 1)];
            m[static_cast<std::size_t>(from - 1)] = 0;
            if (static_cast<int>(m.size()) < to) m.resize(static_cast<std::size_t>(to), 0);
            m[static_cast<std::size_t>(to - 1)] += e;
        }
        out.add_term(std::move(m), c);
    }
    return out;
}

bool Polynomial::divisible_by_difference(int p, int q) const {
    if (p == q) throw InputError("x_p - x_q with p == q is zero");
    return substitute(p, q).is_zero();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial out;
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) {
            Monomial m(std::max(a.size(), b.size()), 0);
            for (std::size_t i = 0; i < a.size(); ++i) m[i] += a[i];
            for (std::size_t i = 0; i < b.size(); ++i) m[i] += b[i];
            out.add_term(std::move(m), ca * cb);
        }
    return out;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw InputError("negative exponent");
    Polynomial out(1);
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Higher total degree first, then by the map order reversed.
    std::vector<std::pair<Monomial, Rational>> ordered(terms_.rbegin(), terms_.rend());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (int e : a.first) da += e;
        for (int e : b.first) db += e;
        return da > db;
    });
    for (const auto& [m, c] : ordered) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (out.empty()) out += c < 0 ? "-" : "";
        else out += c < 0 ? " - " : " + ";
        std::string vars;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!vars.empty()) vars += '*';
            vars += "x" + std::to_string(i + 1);
            if (m[i] != 1) vars += "^" + std::to_string(m[i]);
        }
        if (vars.empty()) out += mag.str();
        else if (mag == 1) out += vars;
        else out += mag.str() + "*" + vars;
    }
    return out;
}

}  // namespace qfv
