#include "astk/term_order.hpp"

#include <numeric>

namespace astk {

namespace {

std::vector<std::size_t> identity_permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return p;
}

// grevlex restricted to positions [lo, hi) of the permuted vectors
int grevlex_range(const Monomial& a, const Monomial& b, const std::vector<std::size_t>& perm,
                  std::size_t lo, std::size_t hi) {
    long da = 0, db = 0;
    for (std::size_t k = lo; k < hi; ++k) {
        da += a[perm[k]];
        db += b[perm[k]];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t k = hi; k-- > lo;) {
        int ea = a[perm[k]], eb = b[perm[k]];
        if (ea != eb) return ea < eb ? 1 : -1;
    }
    return 0;
}

}  // namespace

TermOrder TermOrder::grevlex(std::size_t nvars) {
    return TermOrder{Kind::GradedReverseLex, identity_permutation(nvars), {}};
}

TermOrder TermOrder::lex(std::size_t nvars) { return TermOrder{Kind::Lex, identity_permutation(nvars), {}}; }

TermOrder TermOrder::elimination(std::vector<std::size_t> block_sizes) {
    std::size_t n = std::accumulate(block_sizes.begin(), block_sizes.end(), std::size_t{0});
    return TermOrder{Kind::Elimination, identity_permutation(n), std::move(block_sizes)};
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
    case Kind::Lex:
        for (std::size_t v : permutation)
            if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
        return 0;
    case Kind::GradedReverseLex:
        return grevlex_range(a, b, permutation, 0, permutation.size());
    case Kind::Elimination: {
        std::size_t lo = 0;
        for (std::size_t size : blocks) {
            int c = grevlex_range(a, b, permutation, lo, lo + size);
            if (c != 0) return c;
            lo += size;
        }
        return 0;
    }
    }
    return 0;
}

std::string TermOrder::kind_name() const {
    switch (kind) {
    case Kind::GradedReverseLex:
        return "grevlex";
    case Kind::Lex:
        return "lex";
    case Kind::Elimination:
        return "elimination";
    }
    return "grevlex";
}

TermOrder::Kind TermOrder::parse_kind(const std::string& name) {
    if (name == "grevlex") return Kind::GradedReverseLex;
    if (name == "lex") return Kind::Lex;
    if (name == "elimination") return Kind::Elimination;
    throw DomainError("unknown term order kind '" + name + "'");
}

}  // namespace astk
