#ifndef DEPTHLAB_SERIALIZE_HPP
#define DEPTHLAB_SERIALIZE_HPP

#include <json.hpp>

#include "depthlab/formulas.hpp"

namespace depthlab {

// insertion-ordered JSON so repeated runs are byte-identical
using OrderedJson = nlohmann::ordered_json;

OrderedJson betti_to_json(const BettiTable& bt);
OrderedJson resolution_to_json(const Resolution& res);
OrderedJson module_to_json(const PresentedModule& m);
OrderedJson complex_to_json(const ChainComplex& x);
OrderedJson depth_report_to_json(const DepthReport& rep);
OrderedJson formula_report_to_json(const FormulaReport& rep);
OrderedJson verify_result_to_json(const VerifyResult& v);
OrderedJson search_result_to_json(const SearchResult& s);

} // namespace depthlab

#endif
