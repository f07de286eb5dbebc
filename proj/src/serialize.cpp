#include "depthlab/serialize.hpp"

namespace depthlab {

namespace {

OrderedJson free_module_to_json(const FreeModule& fm) {
    // list of (twist, rank) pairs, twists ascending
    std::map<std::int64_t, std::int64_t> counts;
    for (auto t : fm.twists) ++counts[t];
    OrderedJson arr = OrderedJson::array();
    for (const auto& [twist, rank] : counts) {
        OrderedJson pair;
        pair["twist"] = twist;
        pair["rank"] = rank;
        arr.push_back(pair);
    }
    return arr;
}

OrderedJson matrix_to_json(const std::vector<ModuleVector>& cols, const PolyRing& S) {
    OrderedJson jcols = OrderedJson::array();
    for (const auto& c : cols) {
        OrderedJson entries = OrderedJson::array();
        for (std::size_t i = 0; i < c.rank(); ++i) entries.push_back(S.format(c[i]));
        jcols.push_back(entries);
    }
    return jcols;
}

} // namespace

OrderedJson betti_to_json(const BettiTable& bt) {
    OrderedJson j;
    j["schema"] = 1;
    j["total"] = bt.total;
    OrderedJson graded = OrderedJson::array();
    for (const auto& [key, val] : bt.graded) {
        OrderedJson cell;
        cell["i"] = key.first;
        cell["j"] = key.second;
        cell["beta"] = val;
        graded.push_back(cell);
    }
    j["graded"] = graded;
    return j;
}

OrderedJson resolution_to_json(const Resolution& res) {
    const PolyRing& S = res.ring->poly();
    OrderedJson j;
    j["schema"] = 1;
    j["kind"] = "resolution";
    j["bound"] = res.bound;
    j["complete"] = res.complete;
    if (res.complete) j["pd"] = res.length();
    OrderedJson frees = OrderedJson::array();
    for (const auto& fm : res.frees) frees.push_back(free_module_to_json(fm));
    j["frees"] = frees;
    OrderedJson diffs = OrderedJson::array();
    for (const auto& d : res.diffs) diffs.push_back(matrix_to_json(d, S));
    j["differentials"] = diffs;
    j["betti"] = betti_to_json(betti_table(res));
    return j;
}

OrderedJson module_to_json(const PresentedModule& m) {
    const PolyRing& S = m.ring()->poly();
    OrderedJson j;
    j["schema"] = 1;
    j["kind"] = "module";
    j["gens"] = free_module_to_json(m.gens());
    j["relations"] = matrix_to_json(m.rels(), S);
    return j;
}

OrderedJson complex_to_json(const ChainComplex& x) {
    const PolyRing& S = x.ring()->poly();
    OrderedJson j;
    j["schema"] = 1;
    j["kind"] = "complex";
    j["lo"] = x.lo();
    j["hi"] = x.hi();
    j["trusted_lo"] = x.trusted_lo();
    j["trusted_hi"] = x.trusted_hi();
    OrderedJson terms = OrderedJson::array();
    for (std::int64_t i = x.lo(); i <= x.hi(); ++i) {
        OrderedJson t;
        t["position"] = i;
        t["gens"] = free_module_to_json(x.term(i).gens());
        t["relation_count"] = x.term(i).rels().size();
        terms.push_back(t);
    }
    j["terms"] = terms;
    OrderedJson diffs = OrderedJson::array();
    for (std::int64_t i = x.lo() + 1; i <= x.hi(); ++i)
        diffs.push_back(matrix_to_json(x.diff(i), S));
    j["differentials"] = diffs;
    return j;
}

OrderedJson depth_report_to_json(const DepthReport& rep) {
    OrderedJson j;
    j["schema"] = 1;
    if (rep.infinite()) {
        j["depth"] = "infinity";
    } else {
        j["depth"] = rep.value;
    }
    j["method"] = to_string(rep.method);
    return j;
}

OrderedJson formula_report_to_json(const FormulaReport& rep) {
    OrderedJson j;
    j["schema"] = 1;
    j["formula"] = rep.formula;
    j["lhs"] = rep.lhs;
    j["rhs"] = rep.rhs;
    OrderedJson hyps = OrderedJson::array();
    for (const auto& h : rep.hypotheses) {
        OrderedJson hj;
        hj["name"] = h.name;
        hj["satisfied"] = h.satisfied;
        hj["note"] = h.note;
        hyps.push_back(hj);
    }
    j["hypotheses"] = hyps;
    j["verdict"] = rep.verdict;
    j["bound_B"] = rep.bound_b;
    if (rep.certificate_attached) j["certificate"] = true;
    OrderedJson details;
    for (const auto& [k, v] : rep.details) details[k] = v;
    j["details"] = details;
    return j;
}

OrderedJson verify_result_to_json(const VerifyResult& v) {
    OrderedJson j;
    j["schema"] = 1;
    j["kind"] = "reducing-verification";
    j["ok"] = v.ok;
    if (v.ok) {
        j["red_pd_bound"] = v.red_pd_bound;
        j["tail_pd"] = v.tail.pd;
    } else if (v.failure) {
        OrderedJson f;
        f["step"] = v.failure->step;
        f["check"] = v.failure->check;
        f["detail"] = v.failure->detail;
        j["failure"] = f;
    }
    return j;
}

OrderedJson search_result_to_json(const SearchResult& s) {
    OrderedJson j;
    j["schema"] = 1;
    j["kind"] = "reducing-search";
    j["found"] = s.found.has_value();
    j["nodes_explored"] = s.nodes_explored;
    if (s.found) {
        j["r"] = s.found->r();
        OrderedJson steps = OrderedJson::array();
        for (const auto& st : s.found->steps) {
            OrderedJson sj;
            sj["a"] = st.a();
            sj["b"] = st.b();
            sj["n"] = st.n;
            sj["left_twists"] = st.left_twists;
            sj["right_twists"] = st.right_twists;
            steps.push_back(sj);
        }
        j["steps"] = steps;
        j["verification"] = verify_result_to_json(s.certificate);
    } else {
        j["note"] = s.note;
    }
    return j;
}

} // namespace depthlab
