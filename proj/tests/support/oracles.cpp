#include "support/oracles.hpp"

#include <cstdlib>
#include <map>
#include <string>

namespace oracle {

std::uint64_t seed() {
    if (const char* s = std::getenv("ASTK_SEED")) return std::stoull(s);
    return 20240611ULL;
}

std::size_t naive_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c] / rows[r][c];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

namespace {

void monomials_upto(std::size_t n, int degree, astk::Monomial& cur, std::size_t pos, int left,
                    std::vector<astk::Monomial>& out) {
    if (pos == n) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= left; ++e) {
        cur[pos] = e;
        monomials_upto(n, degree, cur, pos + 1, left - e, out);
    }
    cur[pos] = 0;
}

void box_monomials(std::size_t n, int box, astk::Monomial& cur, std::size_t pos, std::vector<astk::Monomial>& out) {
    if (pos == n) {
        out.push_back(cur);
        return;
    }
    for (int e = -box; e <= box; ++e) {
        cur[pos] = e;
        box_monomials(n, box, cur, pos + 1, out);
    }
}

// Solve Σ_i Σ_{m ∈ supports[i]} λ_{i,m} m·g_i = f by naive elimination on the augmented system.
bool solvable(const Poly& f, const std::vector<Poly>& gens, const std::vector<std::vector<astk::Monomial>>& supports) {
    std::map<astk::Monomial, std::size_t> row_of;
    auto row = [&](const astk::Monomial& m) {
        auto it = row_of.find(m);
        if (it != row_of.end()) return it->second;
        std::size_t k = row_of.size();
        row_of.emplace(m, k);
        return k;
    };
    std::vector<std::vector<std::pair<std::size_t, Rational>>> columns;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (const auto& m : supports[i]) {
            std::vector<std::pair<std::size_t, Rational>> col;
            for (const auto& [gm, c] : gens[i].terms()) col.emplace_back(row(astk::monomial_mul(gm, m)), c);
            columns.push_back(std::move(col));
        }
    std::vector<std::pair<std::size_t, Rational>> rhs;
    for (const auto& [m, c] : f.terms()) rhs.emplace_back(row(m), c);
    const std::size_t nrows = row_of.size();
    std::vector<std::vector<Rational>> a(nrows, std::vector<Rational>(columns.size(), Rational(0)));
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [i, c] : columns[j]) a[i][j] += c;
    auto aug = a;
    for (auto& r : aug) r.push_back(0);
    for (const auto& [i, c] : rhs) aug[i].back() += c;
    if (columns.empty()) return f.is_zero();
    return naive_rank(a) == naive_rank(aug);
}

}  // namespace

bool window_member(const Poly& f, const std::vector<Poly>& gens, int window) {
    if (f.is_zero()) return true;
    const std::size_t n = f.ring()->nvars();
    std::vector<std::vector<astk::Monomial>> supports;
    for (const auto& g : gens) {
        std::vector<astk::Monomial> ms;
        astk::Monomial cur(n, 0);
        int room = window - g.degree();
        if (room >= 0 && !g.is_zero()) monomials_upto(n, room, cur, 0, room, ms);
        supports.push_back(std::move(ms));
    }
    return solvable(f, gens, supports);
}

bool laurent_window_member(const Poly& f, const std::vector<Poly>& gens, int box) {
    if (f.is_zero()) return true;
    const std::size_t n = f.ring()->nvars();
    std::vector<astk::Monomial> ms;
    astk::Monomial cur(n, 0);
    box_monomials(n, box, cur, 0, ms);
    std::vector<std::vector<astk::Monomial>> supports(gens.size(), ms);
    return solvable(f, gens, supports);
}

Poly random_poly(std::mt19937_64& rng, const astk::RingPtr& ring, int max_degree, int terms) {
    const std::size_t n = ring->nvars();
    std::uniform_int_distribution<int> coef(-3, 3);
    Poly p(ring);
    for (int t = 0; t < terms; ++t) {
        astk::Monomial m(n, 0);
        std::uniform_int_distribution<int> deg(0, max_degree);
        int d = deg(rng);
        std::uniform_int_distribution<std::size_t> var(0, n - 1);
        for (int k = 0; k < d; ++k) ++m[var(rng)];
        int c = coef(rng);
        if (c == 0) c = 1;
        p.add_term(m, c);
    }
    return p;
}

Poly elementary_by_subsets(const astk::RingPtr& ring, unsigned k) {
    const std::size_t n = ring->nvars();
    Poly out(ring);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<unsigned>(__builtin_popcountll(mask)) != k) continue;
        astk::Monomial m(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) m[i] = 1;
        out.add_term(m, 1);
    }
    return out;
}

std::vector<std::size_t> cobar_mu_cohomology(unsigned n, unsigned max_degree) {
    auto power = [](std::size_t b, unsigned e) {
        std::size_t r = 1;
        while (e--) r *= b;
        return r;
    };
    // rank of the coboundary C^m -> C^{m+1}
    auto coboundary_rank = [&](unsigned m) {
        const std::size_t src = power(n, m), dst = power(n, m + 1);
        std::vector<std::vector<Rational>> rows(dst, std::vector<Rational>(src, Rational(0)));
        for (std::size_t c = 0; c < src; ++c) {
            std::vector<std::size_t> digits(m);
            for (unsigned k = 0, x = static_cast<unsigned>(c); k < m; ++k) {
                digits[m - 1 - k] = x % n;
                x /= n;
            }
            for (unsigned i = 0; i <= m + 1; ++i) {
                std::vector<std::size_t> out;
                if (i == 0) out.push_back(0);
                for (unsigned k = 0; k < m; ++k) {
                    out.push_back(digits[k]);
                    if (k + 1 == i) out.push_back(digits[k]);
                }
                if (i == m + 1) out.push_back(0);
                std::size_t idx = 0;
                for (auto dgt : out) idx = idx * n + dgt;
                rows[idx][c] += (i % 2 ? -1 : 1);
            }
        }
        return naive_rank(rows);
    };
    std::vector<std::size_t> ranks;
    for (unsigned m = 0; m <= max_degree; ++m) ranks.push_back(coboundary_rank(m));
    std::vector<std::size_t> h;
    for (unsigned m = 0; m <= max_degree; ++m)
        h.push_back(power(n, m) - ranks[m] - (m ? ranks[m - 1] : 0));
    return h;
}

std::vector<std::size_t> hochschild_unnormalized(const astk::FinDimAlgebra& a, unsigned max_degree) {
    const std::size_t d = a.dim();
    auto power = [](std::size_t b, unsigned e) {
        std::size_t r = 1;
        while (e--) r *= b;
        return r;
    };
    auto digits = [&](std::size_t idx, unsigned len) {
        std::vector<std::size_t> s(len);
        for (unsigned k = len; k-- > 0;) {
            s[k] = idx % d;
            idx /= d;
        }
        return s;
    };
    // rank of b: C_n = A^{⊗(n+1)} → C_{n−1}
    auto rank_b = [&](unsigned n) -> std::size_t {
        if (n == 0) return 0;
        const std::size_t src = power(d, n + 1), dst = power(d, n);
        std::vector<std::vector<Rational>> rows(dst, std::vector<Rational>(src, Rational(0)));
        for (std::size_t c = 0; c < src; ++c) {
            auto s = digits(c, n + 1);
            for (unsigned i = 0; i <= n; ++i) {
                // d_i multiplies slots i, i+1 (cyclically for i = n)
                const std::size_t l = s[i], r = s[(i + 1) % (n + 1)];
                const auto& prod = a.table()[i == n ? r : l][i == n ? l : r];
                for (std::size_t b = 0; b < d; ++b) {
                    if (prod[b] == 0) continue;
                    std::vector<std::size_t> t;
                    if (i == n) {
                        t.push_back(b);
                        for (unsigned k = 1; k < n; ++k) t.push_back(s[k]);
                    } else {
                        for (unsigned k = 0; k <= n; ++k) {
                            if (k == i) t.push_back(b);
                            else if (k != i + 1) t.push_back(s[k]);
                        }
                    }
                    std::size_t idx = 0;
                    for (auto x : t) idx = idx * d + x;
                    rows[idx][c] += (i % 2 ? -1 : 1) * prod[b];
                }
            }
        }
        return naive_rank(rows);
    };
    std::vector<std::size_t> h;
    std::size_t prev = 0;
    for (unsigned n = 0; n <= max_degree; ++n) {
        std::size_t next = rank_b(n + 1);
        h.push_back(power(d, n + 1) - prev - next);
        prev = next;
    }
    return h;
}

}  // namespace oracle
