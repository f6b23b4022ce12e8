#include "jacstrata/strata.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace jacstrata {

namespace {

void require_type(bool ok, const char* need) {
    if (!ok)
        throw Error(ErrorCode::WrongCurveType,
                    std::string("operation requires a curve of type ") + need);
}

}  // namespace

StratumReport stratify(SemigroupPtr s) {
    const int delta = s->delta();
    const int gamma = s->gamma();
    const TypeTags tags = classify_type(*s);

    EnumOptions opt;
    opt.normalized_only = true;
    std::vector<GammaSemimodule> mods = enumerate_semimodules(s, opt);

    std::map<int, Stratum> by_r;
    for (auto& m : mods) {
        ModuleAnnotation a{m, ranks(m), false, false, *s, std::nullopt, std::nullopt};
        EndSemigroup e = end_semigroup(m);
        a.descends = e.descends;
        a.end_is_gamma = e.end == *s;
        a.end = std::move(e.end);
        if (a.rk.codim == delta) a.in_filt = in_filt_locus(m);
        if (tags.rk_mc1_m1c1) a.p_split = p_split(*s, m);
        by_r[a.rk.r].modules.push_back(std::move(a));
    }

    StratumReport rep;
    rep.min_components = 2 * delta - s->conductor() + 1;
    rep.r_lo = gamma - 1;
    rep.r_hi = delta - 1;
    rep.witnesses_complete = true;

    for (auto& [r, st] : by_r) {
        st.r = r;
        st.descending_only = true;
        for (size_t i = 0; i < st.modules.size(); ++i) {
            if (!st.modules[i].descends) {
                st.descending_only = false;
                if (!st.witness) st.witness = i;  // lex-least: enumeration order
            }
        }
        if (r < rep.r_lo || r > rep.r_hi) rep.extra_strata.push_back(r);
        rep.strata.push_back(std::move(st));
    }

    for (int r = rep.r_lo; r <= rep.r_hi; ++r) {
        auto it = std::find_if(rep.strata.begin(), rep.strata.end(),
                               [&](const Stratum& st) { return st.r == r; });
        if (it == rep.strata.end() || !it->witness) rep.witnesses_complete = false;
    }
    return rep;
}

PSplit p_split(const NumericalSemigroup& s, const GammaSemimodule& m) {
    require_type(classify_type(s).rk_mc1_m1c1, "rkMC1_M1C1");
    if (!m.is_normalized())
        throw Error(ErrorCode::Precondition, "p_split expects a normalized module");
    const std::vector<int> orders = m.orders_below();
    if (orders.size() < 2) return PSplit::NotApplicable;
    return orders[1] == 1 ? PSplit::P1 : PSplit::P2;
}

bool p2_closure_predicate(const NumericalSemigroup& s, const GammaSemimodule& m) {
    require_type(classify_type(s).rk_mc1_m1c1, "rkMC1_M1C1");
    const std::vector<int> orders = m.orders_below();
    if (orders.empty() || orders.front() == 0)
        throw Error(ErrorCode::Precondition,
                    "the closure predicate takes a representative with ord >= 1");
    const int k1 = s.multiplicity();
    const int v0 = s.conductor();
    if (orders.front() == 1) {
        for (int x = k1 + 1; x < v0; ++x)
            if (!m.contains(x)) return false;
        return true;
    }
    return orders.back() >= k1;  // o_r with r + 1 = #orders
}

bool p2_overlap_predicate(const NumericalSemigroup& s, const GammaSemimodule& m, int r) {
    require_type(classify_type(s).rk_mc1_m1c1, "rkMC1_M1C1");
    const std::vector<int> orders = m.orders_below();
    if (orders.empty() || orders.front() < 1) return false;
    if ((int)orders.size() != r + 1) return false;
    const int o1 = orders.size() >= 2 ? orders[1] : s.conductor();
    return o1 >= 3;
}

GammaSemimodule stratum_component_witness(SemigroupPtr s, int i) {
    require_type(classify_type(*s).rk_mc1_m1c1, "rkMC1_M1C1");
    const int k1 = s->multiplicity();
    if (i < 1 || i > k1 - 1)
        throw Error(ErrorCode::IndexOutOfRange,
                    "witness index must lie in [1, k1-1]");
    std::vector<int> gens{0};
    for (int j = 2; j <= i; ++j) gens.push_back(j);
    GammaSemimodule w = semimodule_create(s, gens, CreateMode::Generate);
    if (ranks(w).r != i || p_split(*s, w) != PSplit::P2)
        throw Error(ErrorCode::Internal, "witness landed in the wrong stratum");
    return w;
}

bool gorenstein_boundary_predicate(const NumericalSemigroup& s, const GammaSemimodule& m) {
    require_type(classify_type(s).gorenstein_m1c1, "gorenstein_M1C1");
    if (ranks(m).codim != s.delta())
        throw Error(ErrorCode::WrongCodim, "the boundary predicate takes a point of E(C, delta)");
    const std::vector<int> orders = m.orders_below();
    if (orders.empty() || orders.front() < 1)
        throw Error(ErrorCode::Precondition, "the boundary predicate takes ord >= 1");
    const int r = orders.front();
    const int k1 = s.multiplicity();
    const int o1 = orders.size() >= 2 ? orders[1] : s.conductor();
    if (o1 < k1) return false;
    // rk(F_1 / t^{k1+r} O~): orders of the first proper filtration step in
    // [k1, k1+r); the minimal order r itself belongs to F, not to F_1
    int count = 0;
    for (int x = k1; x < k1 + r; ++x)
        if (m.contains(x) && x != r) ++count;
    return count == r - 1;
}

StrataDag strata_dag(const NumericalSemigroup& s) {
    require_type(classify_type(s).m_equals_c, "M_equals_C");
    const NormalizationChain chain = normalization_chain(s);
    const int delta = s.delta();

    StrataDag dag;
    std::map<std::pair<int, int>, size_t> index;
    for (int i = 0; i < delta; ++i) {
        const int v0i = chain.steps[(size_t)i].conductor();
        for (int r = 0; r + 2 <= v0i; ++r) {
            index[{i, r}] = dag.nodes.size();
            dag.nodes.push_back({i, r});
        }
    }
    for (const auto& [key, from] : index) {
        const auto [level, r] = key;
        if (level == 0) continue;
        auto up = index.find({level - 1, r});
        if (up != index.end()) {
            dag.edges.push_back({from, up->second, StrataDag::EdgeKind::Open});
            dag.edges.push_back({from, up->second, StrataDag::EdgeKind::Closure});
        }
        auto diag = index.find({level - 1, r + 1});
        if (diag != index.end())
            dag.edges.push_back({from, diag->second, StrataDag::EdgeKind::Closure});
    }
    std::sort(dag.edges.begin(), dag.edges.end(), [](const auto& a, const auto& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.from != b.from) return a.from < b.from;
        return a.to < b.to;
    });
    return dag;
}

std::string to_dot(const StrataDag& dag) {
    std::ostringstream os;
    os << "digraph strata {\n";
    os << "  rankdir=BT;\n";
    for (const auto& n : dag.nodes) {
        os << "  L" << n.level << "_r" << n.r << " [label=\"";
        if (n.level == 0)
            os << "Pic^0_" << n.r << " C";
        else
            os << "Pic^{-" << n.level << "}_" << n.r << " C^" << n.level;
        os << "\"];\n";
    }
    for (const auto& e : dag.edges) {
        const auto& a = dag.nodes[e.from];
        const auto& b = dag.nodes[e.to];
        os << "  L" << a.level << "_r" << a.r << " -> L" << b.level << "_r" << b.r;
        if (e.kind == StrataDag::EdgeKind::Open)
            os << " [style=solid, label=\"open\"];\n";
        else
            os << " [style=dashed, label=\"closure\"];\n";
    }
    os << "}\n";
    return os.str();
}

PushforwardResult pushforward(const NormalizationChain& chain, int level,
                              const GammaSemimodule& m) {
    if (level < 0 || level >= (int)chain.steps.size())
        throw Error(ErrorCode::IndexOutOfRange, "chain level out of range");
    if (m.parent() != chain.steps[(size_t)level])
        throw Error(ErrorCode::Precondition, "module does not live over the given level");

    const NumericalSemigroup& base = chain.steps.front();
    const int v0 = base.conductor();
    const int v0i = chain.steps[(size_t)level].conductor();
    std::vector<uint8_t> below((size_t)v0, 0);
    for (int x = 0; x < v0; ++x)
        below[(size_t)x] = (x >= v0i) ? 1 : (m.contains(x) ? 1 : 0);

    SemigroupPtr base_ptr = std::make_shared<const NumericalSemigroup>(base);
    GammaSemimodule pushed(base_ptr, std::move(below), m.shift());
    return {std::move(pushed), -level};
}

}  // namespace jacstrata
