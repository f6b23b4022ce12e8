#include "jacstrata/deform.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace jacstrata {

// ---------------------------------------------------------------------------
// Family expression grammar
// ---------------------------------------------------------------------------

namespace {

struct Term {
    long long c = 1;
    int texp = 0;
    int bexp = 0;
};

class Scanner {
public:
    explicit Scanner(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    char take() {
        skip_ws();
        return s_[pos_++];
    }
    long long integer() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_]))
            throw Error(ErrorCode::SyntaxError, "expected an integer at position " +
                                                    std::to_string(pos_));
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000) throw Error(ErrorCode::SyntaxError, "integer too large");
            ++pos_;
        }
        return v;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
};

Term parse_term(Scanner& sc) {
    Term t;
    bool saw_factor = false;
    for (;;) {
        char c = sc.peek();
        if (c == 't' || c == 'b') {
            sc.take();
            int e = 1;
            if (sc.peek() == '^') {
                sc.take();
                e = (int)sc.integer();
            }
            if (c == 't') t.texp += e;
            else t.bexp += e;
            saw_factor = true;
        } else if (std::isdigit((unsigned char)c)) {
            t.c *= sc.integer();
            saw_factor = true;
        } else if (c == '*') {
            sc.take();
            continue;
        } else {
            break;
        }
    }
    if (!saw_factor)
        throw Error(ErrorCode::SyntaxError, "empty term in family expression");
    return t;
}

}  // namespace

DeformationFamily parse_family(const std::string& expr, const NumericalSemigroup& s) {
    const int v0 = s.conductor();
    DeformationFamily fam;
    fam.coeff.assign((size_t)v0 + 1, BPoly());

    Scanner sc(expr);
    bool first = true;
    while (!sc.done()) {
        long long sign = 1;
        char c = sc.peek();
        if (c == '+' || c == '-') {
            sc.take();
            sign = c == '-' ? -1 : 1;
        } else if (!first) {
            throw Error(ErrorCode::SyntaxError, "expected '+' or '-' between terms");
        }
        Term t = parse_term(sc);
        t.c *= sign;
        if (t.texp > v0) {
            fam.truncated_terms = true;  // lands inside C, invisible mod C
        } else {
            fam.coeff[(size_t)t.texp] += BPoly::monomial(Rational(t.c), t.bexp);
        }
        first = false;
    }
    if (first) throw Error(ErrorCode::SyntaxError, "empty family expression");
    if (!fam.is_unit())
        throw Error(ErrorCode::NotAUnit,
                    "family has positive t-order over the function field");
    return fam;
}

std::string DeformationFamily::expr() const {
    std::string out;
    for (size_t j = 0; j < coeff.size(); ++j) {
        const BPoly& p = coeff[j];
        for (int w = 0; w <= p.degree(); ++w) {
            Rational c = p.coeff(w);
            if (c.is_zero()) continue;
            const bool neg = c.num() < 0;
            Rational a = neg ? -c : c;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            std::string body;
            if (!a.is_one() || (w == 0 && j == 0)) body = a.str();
            if (w > 0) {
                if (!body.empty()) body += "*";
                body += w == 1 ? "b" : "b^" + std::to_string(w);
            }
            if (j > 0) {
                if (!body.empty()) body += "*";
                body += j == 1 ? "t" : "t^" + std::to_string(j);
            }
            out += body;
        }
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Lattices and saturation
// ---------------------------------------------------------------------------

namespace {

// Fraction-free row elimination; returns the rank over Q(b).
int poly_rank(std::vector<std::vector<BPoly>> m, int cols) {
    int row = 0;
    for (int col = 0; col < cols && row < (int)m.size(); ++col) {
        int piv = -1;
        for (int r = row; r < (int)m.size(); ++r)
            if (!m[(size_t)r][(size_t)col].is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[(size_t)row], m[(size_t)piv]);
        for (int r = row + 1; r < (int)m.size(); ++r) {
            if (m[(size_t)r][(size_t)col].is_zero()) continue;
            const BPoly a = m[(size_t)row][(size_t)col];
            const BPoly b = m[(size_t)r][(size_t)col];
            for (int cc = col; cc < cols; ++cc)
                m[(size_t)r][(size_t)cc] =
                    a * m[(size_t)r][(size_t)cc] - b * m[(size_t)row][(size_t)cc];
        }
        ++row;
    }
    return row;
}

// Reduced row echelon form over Q, in place; returns pivot columns.
std::vector<int> rref(std::vector<std::vector<Rational>>& m, int cols) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols && row < (int)m.size(); ++col) {
        int piv = -1;
        for (int r = row; r < (int)m.size(); ++r)
            if (!m[(size_t)r][(size_t)col].is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[(size_t)row], m[(size_t)piv]);
        const Rational inv = Rational(1) / m[(size_t)row][(size_t)col];
        for (int cc = 0; cc < cols; ++cc) m[(size_t)row][(size_t)cc] *= inv;
        for (int r = 0; r < (int)m.size(); ++r) {
            if (r == row || m[(size_t)r][(size_t)col].is_zero()) continue;
            const Rational f = m[(size_t)r][(size_t)col];
            for (int cc = 0; cc < cols; ++cc)
                m[(size_t)r][(size_t)cc] -= f * m[(size_t)row][(size_t)cc];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

PolyLattice build_lattice(const NumericalSemigroup& s, const DeformationFamily& fam) {
    if (!fam.is_unit())
        throw Error(ErrorCode::NotAUnit, "lattice requires a unit family");
    const int v0 = s.conductor();
    PolyLattice lat;
    lat.cols = v0;
    for (int e : s.elements_below()) {
        std::vector<BPoly> row((size_t)v0);
        for (int col = e; col < v0; ++col) row[(size_t)col] = fam.coeff[(size_t)(col - e)];
        lat.rows.push_back(std::move(row));
    }
    lat.generic_rank = poly_rank(lat.rows, lat.cols);
    if (lat.generic_rank != s.gamma())
        throw Error(ErrorCode::RankDrop,
                    "family is not flat of the expected codimension: generic rank " +
                        std::to_string(lat.generic_rank) + " < " + std::to_string(s.gamma()));
    return lat;
}

PolyLattice saturate_lattice(PolyLattice lattice) {
    const int cols = lattice.cols;
    const int n = (int)lattice.rows.size();

    int degree_budget = 8;
    for (const auto& row : lattice.rows)
        for (const auto& p : row) degree_budget += p.degree() + 1;
    degree_budget *= 2;

    for (int iter = 0; iter <= degree_budget; ++iter) {
        // Echelonize the b = 0 evaluations, tracking combinations of the
        // original rows; the first row that dies gives the division step.
        std::vector<std::vector<Rational>> reduced;
        std::vector<std::vector<Rational>> lambda;
        std::vector<int> pivcol;

        int dying = -1;
        std::vector<Rational> dying_lambda;
        for (int k = 0; k < n && dying < 0; ++k) {
            std::vector<Rational> v((size_t)cols);
            for (int c = 0; c < cols; ++c) v[(size_t)c] = lattice.rows[(size_t)k][(size_t)c].at_zero();
            std::vector<Rational> lam((size_t)n);
            lam[(size_t)k] = Rational(1);
            for (size_t p = 0; p < reduced.size(); ++p) {
                const Rational f = v[(size_t)pivcol[p]];
                if (f.is_zero()) continue;
                for (int c = 0; c < cols; ++c) v[(size_t)c] -= f * reduced[p][(size_t)c];
                for (int i = 0; i < n; ++i) lam[(size_t)i] -= f * lambda[p][(size_t)i];
            }
            int pc = -1;
            for (int c = 0; c < cols; ++c)
                if (!v[(size_t)c].is_zero()) { pc = c; break; }
            if (pc < 0) {
                dying = k;
                dying_lambda = std::move(lam);
            } else {
                const Rational inv = Rational(1) / v[(size_t)pc];
                for (int c = 0; c < cols; ++c) v[(size_t)c] *= inv;
                for (int i = 0; i < n; ++i) lam[(size_t)i] *= inv;
                reduced.push_back(std::move(v));
                lambda.push_back(std::move(lam));
                pivcol.push_back(pc);
            }
        }
        if (dying < 0) return lattice;  // b = 0 evaluations are independent

        std::vector<BPoly> comb((size_t)cols);
        for (int i = 0; i < n; ++i) {
            if (dying_lambda[(size_t)i].is_zero()) continue;
            for (int c = 0; c < cols; ++c)
                comb[(size_t)c] += dying_lambda[(size_t)i] * lattice.rows[(size_t)i][(size_t)c];
        }
        bool all_zero = true;
        for (int c = 0; c < cols; ++c) {
            if (comb[(size_t)c].is_zero()) continue;
            all_zero = false;
            comb[(size_t)c] = comb[(size_t)c].shifted_down();
        }
        if (all_zero)
            throw Error(ErrorCode::Internal, "saturation met a Q(b)-dependent row set");
        lattice.rows[(size_t)dying] = std::move(comb);
    }
    throw Error(ErrorCode::Internal, "saturation failed to terminate within its budget");
}

LimitResult flat_limit(SemigroupPtr s, const DeformationFamily& fam) {
    PolyLattice lat = saturate_lattice(build_lattice(*s, fam));
    const int v0 = lat.cols;

    std::vector<std::vector<Rational>> basis;
    for (const auto& row : lat.rows) {
        std::vector<Rational> v((size_t)v0);
        for (int c = 0; c < v0; ++c) v[(size_t)c] = row[(size_t)c].at_zero();
        basis.push_back(std::move(v));
    }
    std::vector<int> pivots = rref(basis, v0);
    if ((int)pivots.size() != lat.generic_rank)
        throw Error(ErrorCode::Internal, "saturated lattice lost rank at b = 0");

    // The limit must be a module: invariant under every shift operator t^g.
    for (int g : s->generators()) {
        for (const auto& row : basis) {
            std::vector<Rational> w((size_t)v0);
            for (int c = 0; c + g < v0; ++c) w[(size_t)(c + g)] = row[(size_t)c];
            for (size_t p = 0; p < basis.size(); ++p) {
                const Rational f = w[(size_t)pivots[p]];
                if (f.is_zero()) continue;
                for (int c = 0; c < v0; ++c) w[(size_t)c] -= f * basis[p][(size_t)c];
            }
            for (int c = 0; c < v0; ++c)
                if (!w[(size_t)c].is_zero())
                    throw Error(ErrorCode::Internal, "flat limit is not a module");
        }
    }

    LimitResult res;
    res.orders = pivots;
    res.codim = v0 - (int)pivots.size();
    res.monomial = true;
    for (const auto& row : basis) {
        int nonzero = 0;
        for (int c = 0; c < v0; ++c)
            if (!row[(size_t)c].is_zero()) ++nonzero;
        if (nonzero != 1) { res.monomial = false; break; }
    }
    if (res.monomial)
        res.module = semimodule_create(s, pivots, CreateMode::Validate);
    res.basis = std::move(basis);
    return res;
}

// ---------------------------------------------------------------------------
// Certificate search
// ---------------------------------------------------------------------------

namespace {

std::vector<long long> canonical_coefficients(std::vector<long long> cs) {
    cs.erase(std::remove(cs.begin(), cs.end(), 0), cs.end());
    std::sort(cs.begin(), cs.end(), [](long long a, long long b) {
        const long long aa = a < 0 ? -a : a, ab = b < 0 ? -b : b;
        if (aa != ab) return aa < ab;
        return a > b;  // positive before negative
    });
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    if (cs.empty()) throw Error(ErrorCode::Precondition, "empty coefficient set");
    return cs;
}

struct PatternSpace {
    std::vector<int> support;       // ascending t-exponents, support[0] == 0
    int wbase = 0;                  // max_b_degree + 1
    std::vector<long long> coeffs;  // canonical order
    long long n_w = 0;              // wbase^k
    long long n_c = 0;              // coeffs^(k-1); leading coefficient pinned to +1
    long long total() const { return n_w * n_c; }

    // Decode; false when the w-vector is not scale-canonical (min w > 0).
    bool decode(long long idx, std::vector<int>& w, std::vector<long long>& c) const {
        const int k = (int)support.size();
        long long wi = idx / n_c, ci = idx % n_c;
        w.assign((size_t)k, 0);
        for (int i = k - 1; i >= 0; --i) { w[(size_t)i] = (int)(wi % wbase); wi /= wbase; }
        if (*std::min_element(w.begin(), w.end()) != 0) return false;
        c.assign((size_t)k, 1);
        for (int i = k - 1; i >= 1; --i) { c[(size_t)i] = coeffs[(size_t)(ci % (long long)coeffs.size())]; ci /= (long long)coeffs.size(); }
        return true;
    }

    DeformationFamily family(const std::vector<int>& w, const std::vector<long long>& c,
                             int v0) const {
        DeformationFamily fam;
        fam.coeff.assign((size_t)v0 + 1, BPoly());
        for (size_t i = 0; i < support.size(); ++i)
            fam.coeff[(size_t)support[i]] = BPoly::monomial(Rational(c[i]), w[i]);
        return fam;
    }
};

bool limit_matches(SemigroupPtr s, const DeformationFamily& fam,
                   const std::vector<uint8_t>& target_below) {
    try {
        LimitResult lr = flat_limit(s, fam);
        return lr.monomial && lr.module->below() == target_below;
    } catch (const Error&) {
        return false;  // RankDrop and friends: the pattern is not a certificate
    }
}

template <typename OnSupport>
void for_each_support(int v0, int max_support, OnSupport&& fn) {
    const uint64_t full = v0 >= 63 ? ~(uint64_t)0 : (((uint64_t)1 << v0) - 1);
    for (uint64_t mask = 1; mask <= full; mask += 2) {  // always contains t^0
        if (__builtin_popcountll(mask) > max_support) continue;
        std::vector<int> sup;
        for (int j = 0; j < v0; ++j)
            if (mask & ((uint64_t)1 << j)) sup.push_back(j);
        if (!fn(sup)) return;
    }
}

}  // namespace

std::string SearchBudget::describe() const {
    std::string s = "W=" + std::to_string(max_b_degree) +
                    ", support<=" + std::to_string(max_support) + ", coeffs={";
    const auto cs = canonical_coefficients(coefficients);
    for (size_t i = 0; i < cs.size(); ++i)
        s += (i ? "," : "") + std::to_string(cs[i]);
    return s + "}";
}

std::optional<DeformationFamily> certificate_search_serial(SemigroupPtr s,
                                                           const GammaSemimodule& target,
                                                           const SearchBudget& budget) {
    if (s->conductor() > 24)
        throw Error(ErrorCode::TooLarge, "certificate search is limited to conductor <= 24");
    if (ranks(target).codim != s->delta())
        throw Error(ErrorCode::WrongCodim, "certificate targets live in E(C, delta)");
    const int v0 = s->conductor();
    const std::vector<uint8_t>& tb = target.below();

    std::optional<DeformationFamily> found;
    for_each_support(v0, budget.max_support, [&](const std::vector<int>& sup) {
        PatternSpace ps;
        ps.support = sup;
        ps.wbase = budget.max_b_degree + 1;
        ps.coeffs = canonical_coefficients(budget.coefficients);
        ps.n_w = 1;
        for (size_t i = 0; i < sup.size(); ++i) ps.n_w *= ps.wbase;
        ps.n_c = 1;
        for (size_t i = 1; i < sup.size(); ++i) ps.n_c *= (long long)ps.coeffs.size();

        std::vector<int> w;
        std::vector<long long> c;
        for (long long idx = 0; idx < ps.total(); ++idx) {
            if (!ps.decode(idx, w, c)) continue;
            DeformationFamily fam = ps.family(w, c, v0);
            if (limit_matches(s, fam, tb)) {
                found = std::move(fam);
                return false;  // stop the support sweep
            }
        }
        return true;
    });
    return found;
}

std::optional<DeformationFamily> certificate_search(SemigroupPtr s,
                                                    const GammaSemimodule& target,
                                                    const SearchBudget& budget) {
    if (s->conductor() > 24)
        throw Error(ErrorCode::TooLarge, "certificate search is limited to conductor <= 24");
    if (ranks(target).codim != s->delta())
        throw Error(ErrorCode::WrongCodim, "certificate targets live in E(C, delta)");
    const int v0 = s->conductor();
    const std::vector<uint8_t>& tb = target.below();

    std::optional<DeformationFamily> found;
    for_each_support(v0, budget.max_support, [&](const std::vector<int>& sup) {
        PatternSpace ps;
        ps.support = sup;
        ps.wbase = budget.max_b_degree + 1;
        ps.coeffs = canonical_coefficients(budget.coefficients);
        ps.n_w = 1;
        for (size_t i = 0; i < sup.size(); ++i) ps.n_w *= ps.wbase;
        ps.n_c = 1;
        for (size_t i = 1; i < sup.size(); ++i) ps.n_c *= (long long)ps.coeffs.size();

        const long long total = ps.total();
        long long best = INT64_MAX;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best)
#endif
        for (long long idx = 0; idx < total; ++idx) {
            if (idx >= best) continue;  // a better match is already known
            std::vector<int> w;
            std::vector<long long> c;
            if (!ps.decode(idx, w, c)) continue;
            DeformationFamily fam = ps.family(w, c, v0);
            if (limit_matches(s, fam, tb)) best = std::min(best, idx);
        }
        if (best != INT64_MAX) {
            std::vector<int> w;
            std::vector<long long> c;
            ps.decode(best, w, c);
            found = ps.family(w, c, v0);
            return false;
        }
        return true;
    });
    return found;
}

std::vector<SearchBudget> default_ladder() {
    return {
        SearchBudget{1, 2, {1}},
        SearchBudget{2, 3, {1, -1}},
        SearchBudget{3, 4, {1, -1}},
        SearchBudget{4, 5, {1, -1}},
    };
}

FiltCertReport filt_certificate_report(SemigroupPtr s,
                                       const std::vector<SearchBudget>& ladder) {
    FiltCertReport rep;
    rep.ladder = ladder;
    EnumOptions opt;
    opt.codim = s->delta();
    rep.all_found = true;
    for (const auto& m : enumerate_semimodules(s, opt)) {
        if (!in_filt_locus(m)) continue;
        FiltCertEntry entry{m, false, std::nullopt, -1};
        for (size_t rung = 0; rung < ladder.size(); ++rung) {
            auto fam = certificate_search(s, m, ladder[rung]);
            if (fam) {
                entry.found = true;
                entry.family = std::move(fam);
                entry.rung = (int)rung;
                break;
            }
        }
        if (!entry.found) rep.all_found = false;
        rep.entries.push_back(std::move(entry));
    }
    return rep;
}

}  // namespace jacstrata
