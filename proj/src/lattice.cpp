#include "chipfire/lattice.hpp"

#include <stdexcept>

#include "chipfire/errors.hpp"

namespace chipfire {

namespace {

using BigRow = std::vector<mpz_class>;

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

void sub_multiple(BigRow& x, const BigRow& row, const mpz_class& q, std::size_t from) {
    if (q == 0) return;
    for (std::size_t j = from; j < x.size(); ++j) x[j] -= q * row[j];
}

}  // namespace

LatticeHandle::LatticeHandle(std::vector<Vec> generators, std::size_t dim)
    : dim_(dim), generators_(std::move(generators)) {
    std::vector<BigRow> rows;
    for (const auto& g : generators_) {
        if (g.size() != dim_) throw DimensionError("generator dimension mismatch");
        BigRow r(dim_);
        for (std::size_t j = 0; j < dim_; ++j) r[j] = static_cast<long>(g[j]);
        rows.push_back(std::move(r));
    }

    std::size_t r = 0, m = rows.size();
    for (std::size_t c = 0; c < dim_ && r < m; ++c) {
        bool have_pivot = false;
        while (true) {
            std::size_t best = m;
            for (std::size_t k = r; k < m; ++k) {
                if (rows[k][c] == 0) continue;
                if (best == m || abs(rows[k][c]) < abs(rows[best][c])) best = k;
            }
            if (best == m) break;
            have_pivot = true;
            std::swap(rows[r], rows[best]);
            bool done = true;
            for (std::size_t k = r + 1; k < m; ++k) {
                if (rows[k][c] == 0) continue;
                sub_multiple(rows[k], rows[r], floor_div(rows[k][c], rows[r][c]), c);
                if (rows[k][c] != 0) done = false;
            }
            if (done) break;
        }
        if (!have_pivot) continue;
        if (rows[r][c] < 0)
            for (auto& x : rows[r]) x = -x;
        for (std::size_t k = 0; k < r; ++k) sub_multiple(rows[k], rows[r], floor_div(rows[k][c], rows[r][c]), c);
        pivots_.push_back(c);
        ++r;
    }
    rows.resize(r);
    hnf_ = std::move(rows);

    small_ = true;
    for (const auto& row : hnf_) {
        Vec s(dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            if (!row[j].fits_sint_p()) small_ = false;
            s[j] = row[j].get_si();
        }
        hnf_small_.push_back(std::move(s));
    }
}

std::vector<mpz_class> LatticeHandle::residue_big(const Vec& x) const {
    BigRow y(dim_);
    for (std::size_t j = 0; j < dim_; ++j) y[j] = static_cast<long>(x[j]);
    for (std::size_t i = 0; i < hnf_.size(); ++i) {
        auto c = pivots_[i];
        sub_multiple(y, hnf_[i], floor_div(y[c], hnf_[i][c]), c);
    }
    return y;
}

Vec LatticeHandle::residue(const Vec& x) const {
    if (x.size() != dim_) throw DimensionError("vector dimension mismatch");
    if (small_) {
        Vec y = x;
        bool overflow = false;
        for (std::size_t i = 0; i < hnf_small_.size() && !overflow; ++i) {
            auto c = pivots_[i];
            const auto& row = hnf_small_[i];
            std::int64_t q = floor_div(y[c], row[c]);
            if (q == 0) continue;
            for (std::size_t j = c; j < dim_; ++j) {
                std::int64_t t;
                if (__builtin_mul_overflow(q, row[j], &t) || __builtin_sub_overflow(y[j], t, &y[j])) {
                    overflow = true;
                    break;
                }
            }
        }
        if (!overflow) return y;
    }
    auto big = residue_big(x);
    Vec y(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        if (!big[j].fits_slong_p()) throw std::overflow_error("lattice residue exceeds int64");
        y[j] = big[j].get_si();
    }
    return y;
}

bool LatticeHandle::contains(const Vec& x) const {
    if (x.size() != dim_) throw DimensionError("vector dimension mismatch");
    for (const auto& v : residue_big(x))
        if (v != 0) return false;
    return true;
}

bool LatticeHandle::contains(const QVec& x) const {
    if (x.size() != dim_) throw DimensionError("vector dimension mismatch");
    BigRow y(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        mpq_class c = x[j];
        c.canonicalize();
        if (c.get_den() != 1) return false;
        y[j] = c.get_num();
    }
    for (std::size_t i = 0; i < hnf_.size(); ++i) {
        auto c = pivots_[i];
        const auto& h = hnf_[i][c];
        if (!mpz_divisible_p(y[c].get_mpz_t(), h.get_mpz_t())) return false;
        sub_multiple(y, hnf_[i], y[c] / h, c);
    }
    for (const auto& v : y)
        if (v != 0) return false;
    return true;
}

LatticeHandle LatticeHandle::scaled(const Vec& w) const {
    if (w.size() != dim_) throw DimensionError("scaling vector dimension mismatch");
    std::vector<Vec> gens;
    for (const auto& g : generators_) {
        Vec s(dim_);
        for (std::size_t j = 0; j < dim_; ++j) s[j] = checked_mul(w[j], g[j]);
        gens.push_back(std::move(s));
    }
    return LatticeHandle(std::move(gens), dim_);
}

bool lattice_membership(const LatticeHandle& L, const QVec& x) { return L.contains(x); }

LatticeHandle scale_lattice(const LatticeHandle& L, const Vec& w) { return L.scaled(w); }

}  // namespace chipfire
