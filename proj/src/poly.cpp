#include "strata/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace strata {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
    Rational q;
    std::string s(text);
    if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
        throw ParseError("invalid rational: '" + s + "'");
    }
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------- VarId

std::string VarId::name() const {
    switch (kind) {
        case VarKind::Z: return "z";
        case VarKind::Lambda: return "lam";
        case VarKind::P: return "p" + std::to_string(j);
        case VarKind::H: return "H[" + std::to_string(j) + "," + std::to_string(k) + "]";
        case VarKind::T: return "t";
        case VarKind::X: return "X";
        case VarKind::Y: return "Y";
    }
    return "?";
}

namespace {

bool parse_int(std::string_view s, int& out) {
    if (s.empty()) return false;
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) return false;
    long v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        v = v * 10 + (s[i] - '0');
        if (v > 1'000'000) return false;
    }
    out = static_cast<int>(neg ? -v : v);
    return true;
}

}  // namespace

VarId parse_var(std::string_view s) {
    if (s == "z") return VarId::z();
    if (s == "lam") return VarId::lambda();
    if (s == "t") return VarId::t();
    if (s == "X") return VarId::X();
    if (s == "Y") return VarId::Y();
    int j = 0;
    int k = 0;
    if (s.size() > 1 && s[0] == 'p' && parse_int(s.substr(1), j) && j >= 0) return VarId::p(j);
    if (s.size() > 5 && s.substr(0, 2) == "H[" && s.back() == ']') {
        auto inner = s.substr(2, s.size() - 3);
        auto comma = inner.find(',');
        if (comma != std::string_view::npos && parse_int(inner.substr(0, comma), j) &&
            parse_int(inner.substr(comma + 1), k) && j >= 0) {
            return VarId::H(j, k);
        }
    }
    throw ParseError("unknown variable: '" + std::string(s) + "'");
}

// ------------------------------------------------------------- Monomial

Monomial::Monomial(VarId v, unsigned e) {
    if (e > 0) entries_.emplace_back(v, e);
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    Monomial m;
    for (const auto& [v, e] : entries) {
        if (e == 0) continue;
        if (!m.entries_.empty() && m.entries_.back().first == v) {
            m.entries_.back().second += e;
        } else {
            m.entries_.emplace_back(v, e);
        }
    }
    return m;
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (const auto& entry : entries_) d += entry.second;
    return d;
}

unsigned Monomial::degree_in(VarId v) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                               [](const Entry& e, VarId x) { return e.first < x; });
    return (it != entries_.end() && it->first == v) ? it->second : 0;
}

std::optional<VarId> Monomial::max_var() const {
    if (entries_.empty()) return std::nullopt;
    return entries_.back().first;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.entries_.reserve(entries_.size() + o.entries_.size());
    auto a = entries_.begin();
    auto b = o.entries_.begin();
    while (a != entries_.end() && b != o.entries_.end()) {
        if (a->first < b->first) {
            r.entries_.push_back(*a++);
        } else if (b->first < a->first) {
            r.entries_.push_back(*b++);
        } else {
            r.entries_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    r.entries_.insert(r.entries_.end(), a, entries_.end());
    r.entries_.insert(r.entries_.end(), b, o.entries_.end());
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (const auto& [v, e] : entries_) {
        if (o.degree_in(v) < e) return false;
    }
    return true;
}

Monomial Monomial::quotient(const Monomial& o) const {
    Monomial r;
    for (const auto& [v, e] : entries_) {
        unsigned d = o.degree_in(v);
        if (d > e) throw Error("monomial quotient: not divisible");
        if (e > d) r.entries_.emplace_back(v, e - d);
    }
    return r;
}

Monomial Monomial::without(VarId v) const {
    Monomial r;
    for (const auto& entry : entries_) {
        if (entry.first != v) r.entries_.push_back(entry);
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
    std::vector<Entry> all;
    for (const auto& [v, e] : entries_) all.emplace_back(v, std::max(e, o.degree_in(v)));
    for (const auto& [v, e] : o.entries_) {
        if (degree_in(v) == 0) all.emplace_back(v, e);
    }
    return from_entries(std::move(all));
}

std::string Monomial::str() const {
    std::string out;
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
        if (!out.empty()) out += '*';
        out += it->first.name();
        if (it->second != 1) out += "^" + std::to_string(it->second);
    }
    return out;
}

int lex_compare(const Monomial& a, const Monomial& b) {
    auto ia = a.entries().rbegin();
    auto ib = b.entries().rbegin();
    while (ia != a.entries().rend() && ib != b.entries().rend()) {
        if (ia->first != ib->first) return ia->first > ib->first ? 1 : -1;
        if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
        ++ia;
        ++ib;
    }
    if (ia != a.entries().rend()) return 1;
    if (ib != b.entries().rend()) return -1;
    return 0;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
    unsigned da = a.degree();
    unsigned db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    return lex_compare(a, b);
}

// ----------------------------------------------------------------- Poly

Poly::Poly(long c) {
    if (c != 0) terms_.push_back({Monomial{}, Rational(c)});
}

Poly::Poly(const Rational& c) {
    if (c != 0) terms_.push_back({Monomial{}, c});
}

Poly::Poly(VarId v, unsigned e) { terms_.push_back({Monomial(v, e), Rational(1)}); }

Poly::Poly(Monomial m, Rational c) {
    if (c != 0) terms_.push_back({std::move(m), std::move(c)});
}

Poly Poly::from_terms(std::vector<Term> terms) {
    Poly p;
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
}

void Poly::canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return grlex_compare(a.mono, b.mono) > 0; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().mono == t.mono) {
            merged.back().coeff += t.coeff;
        } else {
            merged.push_back(std::move(t));
        }
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
    terms_ = std::move(merged);
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

Rational Poly::constant_value() const {
    if (!is_constant()) throw Error("polynomial is not constant: " + str());
    return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

Rational Poly::constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return 0;
}

unsigned Poly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

unsigned Poly::degree_in(VarId v) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree_in(v));
    return d;
}

std::set<VarId> Poly::variables() const {
    std::set<VarId> vars;
    for (const auto& t : terms_) {
        for (const auto& entry : t.mono.entries()) vars.insert(entry.first);
    }
    return vars;
}

bool Poly::contains(VarId v) const {
    return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.mono.contains(v); });
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

namespace {

template <bool Subtract>
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        int c = grlex_compare(ia->mono, ib->mono);
        if (c > 0) {
            out.push_back(*ia++);
        } else if (c < 0) {
            out.push_back({ib->mono, Subtract ? Rational(-ib->coeff) : ib->coeff});
            ++ib;
        } else {
            Rational s = Subtract ? Rational(ia->coeff - ib->coeff) : Rational(ia->coeff + ib->coeff);
            if (s != 0) out.push_back({ia->mono, std::move(s)});
            ++ia;
            ++ib;
        }
    }
    out.insert(out.end(), ia, a.end());
    for (; ib != b.end(); ++ib) out.push_back({ib->mono, Subtract ? Rational(-ib->coeff) : ib->coeff});
    return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms<false>(terms_, o.terms_);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms<true>(terms_, o.terms_);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    if (a.terms_.size() == 1 && a.terms_[0].mono.is_one()) return b.scaled(a.terms_[0].coeff);
    if (b.terms_.size() == 1 && b.terms_[0].mono.is_one()) return a.scaled(b.terms_[0].coeff);
    std::vector<Term> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    Rational prod;
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            mpq_mul(prod.get_mpq_t(), ta.coeff.get_mpq_t(), tb.coeff.get_mpq_t());
            raw.push_back({ta.mono * tb.mono, prod});
        }
    }
    return Poly::from_terms(std::move(raw));
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly Poly::scaled(const Rational& c) const {
    if (c == 0) return Poly{};
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Poly Poly::pow(unsigned k) const {
    Poly result(1L);
    Poly base = *this;
    while (k > 0) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

std::vector<Poly> Poly::coefficients_in(VarId v) const {
    std::vector<std::vector<Term>> buckets(degree_in(v) + 1);
    for (const auto& t : terms_) {
        buckets[t.mono.degree_in(v)].push_back({t.mono.without(v), t.coeff});
    }
    std::vector<Poly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(Poly::from_terms(std::move(b)));
    if (is_zero()) out.assign(1, Poly{});
    return out;
}

Poly Poly::from_coefficients(const std::vector<Poly>& coeffs, VarId v) {
    Poly r;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (!coeffs[i].is_zero()) r += coeffs[i] * Poly(v, static_cast<unsigned>(i));
    }
    return r;
}

std::optional<Rational> Poly::linear_coefficient(VarId v) const {
    std::optional<Rational> c;
    for (const auto& t : terms_) {
        unsigned d = t.mono.degree_in(v);
        if (d == 0) continue;
        if (d > 1 || t.mono.entries().size() != 1 || c) return std::nullopt;
        c = t.coeff;
    }
    return c;
}

Poly Poly::derivative(VarId v) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        unsigned d = t.mono.degree_in(v);
        if (d == 0) continue;
        std::vector<Monomial::Entry> entries = t.mono.entries();
        for (auto& e : entries) {
            if (e.first == v) e.second -= 1;
        }
        out.push_back({Monomial::from_entries(std::move(entries)), t.coeff * d});
    }
    return from_terms(std::move(out));
}

Rational Poly::content() const {
    if (terms_.empty()) return 1;
    Integer num_gcd = 0;
    Integer den_lcm = 1;
    for (const auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

Poly Poly::normalized() const {
    if (terms_.empty()) return *this;
    Rational c = content();
    if (terms_.front().coeff < 0) c = -c;
    Rational inv = 1 / c;
    return scaled(inv);
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        Rational mag = abs(t.coeff);
        bool neg = t.coeff < 0;
        if (first) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        if (t.mono.is_one()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += t.mono.str();
        } else {
            out += to_string(mag) + "*" + t.mono.str();
        }
    }
    return out;
}

// --------------------------------------------------------------- parser

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("poly parse error at " + std::to_string(pos_) + " (" + why + "): '" +
                         std::string(s_) + "'");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        Poly acc = term();
        while (true) {
            if (eat('+')) {
                acc += term();
            } else if (eat('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = unary();
        while (true) {
            if (eat('*')) {
                acc *= unary();
            } else if (eat('/')) {
                Rational d = integer();
                if (d == 0) fail("division by zero");
                acc = acc.scaled(1 / d);
            } else {
                return acc;
            }
        }
    }

    Poly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        Poly base = primary();
        if (eat('^')) {
            Rational e = integer();
            if (e < 0 || e > 100000) fail("bad exponent");
            base = base.pow(static_cast<unsigned>(e.get_num().get_ui()));
        }
        return base;
    }

    Rational integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return parse_rational(s_.substr(start, pos_ - start));
    }

    Poly primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Poly(integer());
        std::size_t start = pos_;
        if (c == 'H') {
            auto close = s_.find(']', pos_);
            if (close == std::string_view::npos) fail("unterminated H[");
            pos_ = close + 1;
        } else {
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        }
        if (start == pos_) fail("expected variable");
        return Poly(parse_var(s_.substr(start, pos_ - start)));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

// --------------------------------------------------------- substitution

namespace {

void check_acyclic(const std::map<VarId, Poly>& bindings) {
    // Dependency edges between distinct bound variables.
    std::map<VarId, std::vector<VarId>> edges;
    for (const auto& [v, value] : bindings) {
        for (VarId w : value.variables()) {
            if (w != v && bindings.count(w)) edges[v].push_back(w);
        }
    }
    std::map<VarId, int> state;  // 0 new, 1 on stack, 2 done
    std::function<void(VarId)> visit = [&](VarId v) {
        state[v] = 1;
        for (VarId w : edges[v]) {
            if (state[w] == 1) throw Error("cyclic substitution through " + v.name() + " and " + w.name());
            if (state[w] == 0) visit(w);
        }
        state[v] = 2;
    };
    for (const auto& entry : bindings) {
        if (state[entry.first] == 0) visit(entry.first);
    }
}

}  // namespace

Poly substitute(const Poly& f, const std::map<VarId, Poly>& bindings) {
    if (bindings.empty() || f.is_zero()) return f;
    check_acyclic(bindings);
    std::map<std::pair<VarId, unsigned>, Poly> powers;
    auto power = [&](VarId v, const Poly& value, unsigned e) -> const Poly& {
        auto key = std::make_pair(v, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        return powers.emplace(key, value.pow(e)).first->second;
    };
    std::vector<Term> kept;
    Poly acc;
    for (const auto& t : f.terms()) {
        std::vector<Monomial::Entry> rest;
        Poly factor(t.coeff);
        bool touched = false;
        for (const auto& [v, e] : t.mono.entries()) {
            auto it = bindings.find(v);
            if (it == bindings.end()) {
                rest.emplace_back(v, e);
            } else {
                touched = true;
                factor *= power(v, it->second, e);
                if (factor.is_zero()) break;
            }
        }
        if (!touched) {
            kept.push_back(t);
        } else if (!factor.is_zero()) {
            acc += factor * Poly(Monomial::from_entries(std::move(rest)), Rational(1));
        }
    }
    return Poly::from_terms(std::move(kept)) + acc;
}

Poly specialize(const Poly& f, const std::map<VarId, Rational>& values) {
    std::map<VarId, Poly> bindings;
    for (const auto& [v, q] : values) bindings.emplace(v, Poly(q));
    return substitute(f, bindings);
}

Poly rename(const Poly& f, const std::map<VarId, VarId>& names) {
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        std::vector<Monomial::Entry> entries;
        for (const auto& [v, e] : t.mono.entries()) {
            auto it = names.find(v);
            entries.emplace_back(it == names.end() ? v : it->second, e);
        }
        out.push_back({Monomial::from_entries(std::move(entries)), t.coeff});
    }
    return Poly::from_terms(std::move(out));
}

// ------------------------------------------------------------- division

std::optional<Poly> try_exact_divide(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("division by zero polynomial");
    if (b.is_constant()) return a.scaled(1 / b.constant_value());
    Poly rem = a;
    std::vector<Term> quotient;
    const Term& lead = b.leading();
    while (!rem.is_zero()) {
        const Term& top = rem.leading();
        if (!lead.mono.divides(top.mono)) return std::nullopt;
        Term q{top.mono.quotient(lead.mono), top.coeff / lead.coeff};
        rem -= b * Poly(q.mono, q.coeff);
        quotient.push_back(std::move(q));
    }
    return Poly::from_terms(std::move(quotient));
}

Poly exact_divide(const Poly& a, const Poly& b) {
    auto q = try_exact_divide(a, b);
    if (!q) throw Error("inexact polynomial division: (" + a.str() + ") / (" + b.str() + ")");
    return *q;
}

bool equal_up_to_scale(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    return f.normalized() == g.normalized();
}

Poly lex_normal_form(const Poly& f, const std::vector<Poly>& divisors) {
    struct Lead {
        Monomial mono;
        Rational coeff;
    };
    auto lex_lead = [](const Poly& p) {
        const Term* best = &p.terms().front();
        for (const auto& t : p.terms()) {
            if (lex_compare(t.mono, best->mono) > 0) best = &t;
        }
        return Lead{best->mono, best->coeff};
    };
    std::vector<Lead> leads;
    for (const auto& d : divisors) {
        if (d.is_zero()) throw Error("lex_normal_form: zero divisor");
        leads.push_back(lex_lead(d));
    }
    Poly p = f;
    Poly remainder;
    while (!p.is_zero()) {
        Lead top = lex_lead(p);
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (leads[i].mono.divides(top.mono)) {
                p -= divisors[i] * Poly(top.mono.quotient(leads[i].mono), top.coeff / leads[i].coeff);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            Poly t(top.mono, top.coeff);
            remainder += t;
            p -= t;
        }
    }
    return remainder;
}

Poly poly_arithmetic(const Poly& a, const Poly& b, ArithOp op, unsigned k) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Pow: return a.pow(k);
    }
    return {};
}

}  // namespace strata
