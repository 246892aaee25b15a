#include "chipfire/graph.hpp"

#include <numeric>

#include "chipfire/errors.hpp"

namespace chipfire {

std::int64_t DirectedMultigraph::out_degree(std::size_t v) const {
    std::int64_t s = 0;
    for (auto m : arcs[v]) s = checked_add(s, m);
    return s;
}

std::int64_t DirectedMultigraph::in_degree(std::size_t v) const {
    std::int64_t s = 0;
    for (const auto& row : arcs) s = checked_add(s, row[v]);
    return s;
}

DirectedMultigraph build_digraph(const std::vector<Arc>& arc_list, std::optional<std::size_t> vertices) {
    if (arc_list.empty()) throw InvalidGraph("graph has no arcs");
    std::size_t n = vertices.value_or(0);
    if (!vertices) {
        for (const auto& a : arc_list) n = std::max({n, a.tail + 1, a.head + 1});
    }
    if (n < 2) throw InvalidGraph("graph needs at least two vertices");
    DirectedMultigraph g;
    g.arcs.assign(n, Vec(n, 0));
    for (const auto& a : arc_list) {
        if (a.tail >= n || a.head >= n) throw InvalidGraph("arc endpoint out of range");
        if (a.tail == a.head) throw InvalidGraph("loop at vertex " + std::to_string(a.tail));
        if (a.multiplicity < 1) throw InvalidGraph("arc multiplicity must be at least 1");
        g.arcs[a.tail][a.head] = checked_add(g.arcs[a.tail][a.head], a.multiplicity);
    }
    return g;
}

namespace {

std::vector<bool> reach(const DirectedMultigraph& g, std::size_t start, bool forward) {
    std::size_t n = g.size();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < n; ++v) {
            auto m = forward ? g.arcs[u][v] : g.arcs[v][u];
            if (m > 0 && !seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
        }
    }
    return seen;
}

}  // namespace

bool is_strongly_connected(const DirectedMultigraph& g) {
    if (g.size() == 0) return false;
    for (bool b : reach(g, 0, true))
        if (!b) return false;
    for (bool b : reach(g, 0, false))
        if (!b) return false;
    return true;
}

Matrix laplacian(const DirectedMultigraph& g, Side) {
    std::size_t n = g.size();
    Matrix q(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) q[i][j] = -g.arcs[i][j];
        q[i][i] = checked_add(q[i][i], g.out_degree(i));
    }
    return q;
}

DirectedMultigraph reversed(const DirectedMultigraph& g) {
    DirectedMultigraph r;
    std::size_t n = g.size();
    r.arcs.assign(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.arcs[j][i] = g.arcs[i][j];
    return r;
}

std::vector<Vec> integer_kernel(const Matrix& m) {
    if (m.empty()) return {};
    std::size_t rows = m.size(), cols = m[0].size();
    std::vector<QVec> a(rows, QVec(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        mpq_class inv = 1 / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            mpq_class f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVec x(cols, 0);
        x[free] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = -a[i][free];
        mpz_class den = 1, g = 0;
        for (auto& q : x) den = lcm(den, mpz_class(q.get_den()));
        std::vector<mpz_class> z(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            mpq_class t = x[j] * den;
            z[j] = t.get_num();
            g = gcd(g, z[j]);
        }
        Vec v(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_class t = z[j] / g;
            if (!t.fits_slong_p()) throw std::overflow_error("kernel vector exceeds int64");
            v[j] = t.get_si();
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Vec period_vector(const DirectedMultigraph& g) {
    if (!is_strongly_connected(g)) throw NotStronglyConnected("digraph is not strongly connected");
    Matrix q = laplacian(g);
    std::size_t n = g.size();
    Matrix qt(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) qt[i][j] = q[j][i];
    auto kernel = integer_kernel(qt);
    if (kernel.size() != 1) throw NotStronglyConnected("Laplacian kernel is not one-dimensional");
    Vec r = kernel[0];
    if (r[0] < 0)
        for (auto& x : r) x = -x;
    for (auto x : r)
        if (x <= 0) throw NotStronglyConnected("kernel vector is not positive");
    return r;
}

}  // namespace chipfire
