#pragma once

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bnhilb/errors.hpp"
#include "bnhilb/field.hpp"

namespace bnhilb {

// Monomial x^a y^b.  Ordering is graded lex with x > y: lower total degree
// first, then higher x-power first.  This is also the column order used for
// row reduction, so ranks of column prefixes are ranks modulo m^j.
struct Mono {
    int a = 0;
    int b = 0;
    int deg() const { return a + b; }
    friend bool operator==(const Mono&, const Mono&) = default;
};

struct GrlexLess {
    bool operator()(const Mono& u, const Mono& v) const {
        if (u.deg() != v.deg()) return u.deg() < v.deg();
        return u.b < v.b;
    }
};

inline long long tri(long long d) { return d * (d + 1) / 2; }

// Position of x^a y^b among all monomials in grlex order (0-based).
inline std::size_t mono_index(const Mono& m) {
    return static_cast<std::size_t>(tri(m.deg()) + m.b);
}

// Bivariate polynomial truncated below total degree `cap`: terms of degree
// >= cap are discarded on construction and after every product.  No stored
// coefficient is zero.
template <FieldOps F>
class TruncatedPoly {
  public:
    using Elem = typename F::Elem;
    using Terms = std::map<Mono, Elem, GrlexLess>;

    explicit TruncatedPoly(int cap) : cap_(cap) {
        if (cap < 1) throw domain_error("poly: cap must be >= 1");
    }

    static TruncatedPoly monomial(const F& f, int cap, int a, int b, const Elem& c) {
        TruncatedPoly p(cap);
        if (a < 0 || b < 0) throw domain_error("poly: negative exponent");
        if (a + b < cap && !f.is_zero(c)) p.terms_[{a, b}] = c;
        return p;
    }

    int cap() const { return cap_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // min total degree of a term; cap for the zero polynomial
    int order() const {
        if (terms_.empty()) return cap_;
        return terms_.begin()->first.deg();
    }

    Elem coeff(const F& f, int a, int b) const {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? f.zero() : it->second;
    }

    void set_coeff(const F& f, int a, int b, const Elem& c) {
        if (a < 0 || b < 0) throw domain_error("poly: negative exponent");
        if (a + b >= cap_) return;
        if (f.is_zero(c))
            terms_.erase({a, b});
        else
            terms_[{a, b}] = c;
    }

    bool eq(const F& f, const TruncatedPoly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        auto it = terms_.begin(), jt = o.terms_.begin();
        for (; it != terms_.end(); ++it, ++jt)
            if (!(it->first == jt->first) || !f.eq(it->second, jt->second)) return false;
        return true;
    }

    std::string str(const F& f) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << f.str(c);
            if (m.a > 0) os << "*x" << (m.a > 1 ? "^" + std::to_string(m.a) : "");
            if (m.b > 0) os << "*y" << (m.b > 1 ? "^" + std::to_string(m.b) : "");
        }
        return os.str();
    }

    friend TruncatedPoly add(const F& f, const TruncatedPoly& p, const TruncatedPoly& q) {
        check_caps(p, q);
        TruncatedPoly r = p;
        for (const auto& [m, c] : q.terms_) {
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                r.terms_[m] = c;
            } else {
                it->second = f.add(it->second, c);
                if (f.is_zero(it->second)) r.terms_.erase(it);
            }
        }
        return r;
    }

    friend TruncatedPoly neg(const F& f, const TruncatedPoly& p) {
        TruncatedPoly r = p;
        for (auto& [m, c] : r.terms_) c = f.neg(c);
        return r;
    }

    friend TruncatedPoly sub(const F& f, const TruncatedPoly& p, const TruncatedPoly& q) {
        return add(f, p, neg(f, q));
    }

    friend TruncatedPoly mul(const F& f, const TruncatedPoly& p, const TruncatedPoly& q) {
        check_caps(p, q);
        TruncatedPoly r(p.cap_);
        for (const auto& [m1, c1] : p.terms_) {
            for (const auto& [m2, c2] : q.terms_) {
                Mono m{m1.a + m2.a, m1.b + m2.b};
                if (m.deg() >= p.cap_) continue;
                auto it = r.terms_.find(m);
                if (it == r.terms_.end()) {
                    auto c = f.mul(c1, c2);
                    if (!f.is_zero(c)) r.terms_[m] = c;
                } else {
                    it->second = f.add(it->second, f.mul(c1, c2));
                    if (f.is_zero(it->second)) r.terms_.erase(it);
                }
            }
        }
        return r;
    }

    friend TruncatedPoly scale(const F& f, const TruncatedPoly& p, const Elem& c) {
        TruncatedPoly r(p.cap_);
        if (f.is_zero(c)) return r;
        for (const auto& [m, v] : p.terms_) {
            auto w = f.mul(v, c);
            if (!f.is_zero(w)) r.terms_[m] = w;
        }
        return r;
    }

    // p shifted by x^da y^db (used to form monomial multiples of generators)
    friend TruncatedPoly shift(const F&, const TruncatedPoly& p, int da, int db) {
        TruncatedPoly r(p.cap_);
        for (const auto& [m, c] : p.terms_) {
            Mono s{m.a + da, m.b + db};
            if (s.deg() < p.cap_) r.terms_[s] = c;
        }
        return r;
    }

  private:
    static void check_caps(const TruncatedPoly& p, const TruncatedPoly& q) {
        if (p.cap_ != q.cap_) throw domain_error("poly: mixed truncation caps");
    }

    int cap_;
    Terms terms_;
};

template <FieldOps F>
class PolyMatrix {
  public:
    PolyMatrix(std::size_t rows, std::size_t cols, int cap)
        : rows_(rows), cols_(cols), cap_(cap), entries_(rows * cols, TruncatedPoly<F>(cap)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    int cap() const { return cap_; }

    TruncatedPoly<F>& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const TruncatedPoly<F>& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    // Submatrix keeping all columns and all rows except `skip` (0-based).
    PolyMatrix drop_row(std::size_t skip) const {
        PolyMatrix s(rows_ - 1, cols_, cap_);
        for (std::size_t i = 0, si = 0; i < rows_; ++i) {
            if (i == skip) continue;
            for (std::size_t j = 0; j < cols_; ++j) s.at(si, j) = at(i, j);
            ++si;
        }
        return s;
    }

  private:
    std::size_t rows_, cols_;
    int cap_;
    std::vector<TruncatedPoly<F>> entries_;
};

namespace detail {

template <FieldOps F>
TruncatedPoly<F> det_rec(const F& f, const PolyMatrix<F>& m, const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) {
    const std::size_t n = rows.size();
    if (n == 1) return m.at(rows[0], cols[0]);
    // expand along the sparsest active column
    std::size_t best = 0, best_count = n + 1;
    for (std::size_t cj = 0; cj < n; ++cj) {
        std::size_t cnt = 0;
        for (auto r : rows)
            if (!m.at(r, cols[cj]).is_zero()) ++cnt;
        if (cnt < best_count) {
            best_count = cnt;
            best = cj;
        }
    }
    TruncatedPoly<F> acc(m.cap());
    if (best_count == 0) return acc;
    std::vector<std::size_t> c2;
    c2.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j)
        if (j != best) c2.push_back(cols[j]);
    for (std::size_t ri = 0; ri < n; ++ri) {
        const auto& e = m.at(rows[ri], cols[best]);
        if (e.is_zero()) continue;
        std::vector<std::size_t> r2;
        r2.reserve(n - 1);
        for (std::size_t i = 0; i < n; ++i)
            if (i != ri) r2.push_back(rows[i]);
        auto term = mul(f, e, det_rec(f, m, r2, c2));
        if ((ri + best) % 2 == 1) term = neg(f, term);
        acc = add(f, acc, term);
    }
    return acc;
}

}  // namespace detail

template <FieldOps F>
TruncatedPoly<F> det_poly(const F& f, const PolyMatrix<F>& m) {
    if (m.rows() != m.cols()) throw domain_error("det: matrix is not square");
    if (m.rows() == 0) return TruncatedPoly<F>::monomial(f, m.cap(), 0, 0, f.one());
    std::vector<std::size_t> idx(m.rows());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return detail::det_rec(f, m, idx, idx);
}

}  // namespace bnhilb
