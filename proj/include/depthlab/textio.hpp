#ifndef DEPTHLAB_TEXTIO_HPP
#define DEPTHLAB_TEXTIO_HPP

#include <map>
#include <string>

#include "depthlab/reducing.hpp"

namespace depthlab {

// Parsed session description: rings, named modules, named check instances.
// Ring fields (p, vars, order) must precede the ideal; modules and
// instances must follow the ring they reference.

struct VarDecl {
    std::string name;
    std::int64_t weight = 1;
};

struct RingDesc {
    std::string name;
    std::uint32_t p = 101;
    std::vector<VarDecl> vars;
    std::string order = "grevlex"; // grevlex | grlex
    std::vector<Polynomial> ideal;
    RingPtr ring; // materialized
};

struct ModuleDesc {
    std::string name;
    std::string ring_name;
    std::vector<std::int64_t> gen_twists;
    std::vector<ModuleVector> rels;
};

struct StepDesc {
    std::int64_t n = 0;
    std::vector<std::int64_t> left_twists;
    std::vector<std::int64_t> right_twists;
    std::vector<std::int64_t> middle_gens;
    std::vector<ModuleVector> middle_rels;
    std::vector<ModuleVector> left_cols;
    std::vector<ModuleVector> right_cols;
};

struct InstanceDesc {
    std::string name;
    std::string ring_name;
    std::string check; // resolve | depth | tor | ext | depth_formula |
                       // derived_depth_formula | dependency_bounds |
                       // one_dim_equivalence | verify_redpd | search_redpd | torsion
    std::string m_name;
    std::string n_name;
    std::int64_t bound = 8;
    std::string mode = "classic";
    bool domain_asserted = false;
    SearchBudgets budgets;
    std::vector<StepDesc> steps;
};

struct SessionDescription {
    std::vector<RingDesc> rings;
    std::vector<ModuleDesc> modules;
    std::vector<InstanceDesc> instances;

    const RingDesc& ring(const std::string& name) const;
    const ModuleDesc& module(const std::string& name) const;
    const InstanceDesc& instance(const std::string& name) const;
    bool has_module(const std::string& name) const;

    PresentedModule materialize(const ModuleDesc& md) const;
    ReducingSequence materialize_certificate(const InstanceDesc& inst) const;
};

SessionDescription parse_session(const std::string& text);
std::string serialize_session(const SessionDescription& desc);

// One polynomial in the session syntax (3*x^2*y + 5*z), over a ring context.
Polynomial parse_polynomial(const std::string& text, const PolyRing& ring);
std::string format_polynomial(const Polynomial& f, const PolyRing& ring);

} // namespace depthlab

#endif
