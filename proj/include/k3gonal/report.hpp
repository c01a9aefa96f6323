#pragma once
// JSON views of the library's result types. Integers become JSON numbers
// when they fit in 64 bits and decimal strings otherwise; rationals are
// always "num/den" strings ("n" for integers).
#include <json.hpp>

#include "k3gonal/brillnoether.hpp"
#include "k3gonal/chains.hpp"
#include "k3gonal/gonality.hpp"
#include "k3gonal/hilbert.hpp"
#include "k3gonal/pencil.hpp"

namespace k3g::report {

using Json = nlohmann::ordered_json;

Json integer(const ExactInt& n);
Json rational(const ExactRational& q);

Json to_json(const bn::NecessityReport& r);
Json to_json(const gonality::GonalityCase& c);
Json to_json(const gonality::Decomposition& d);
Json to_json(const gonality::ExpectedDims& d);
/// {"p", "k", "alpha": {"j": m, ...}, "delta", "genus"}
Json to_json(const chains::ChainPartition& part);
Json to_json(const chains::SymbolicChainCurve& curve);
Json to_json(const chains::StableModel& model);
/// {"degree_bound": n, "coeffs": [["num", "den"], ...]}
Json to_json(const pencil::BinaryForm& form);
/// {"degree": d, "terms": [{"e1": i, "e2": j, "c": ["num", "den"]}, ...]}
Json to_json(const pencil::SymPlaneCurve& curve);
Json to_json(const pencil::SuiteReport& r);
/// {"a", "y"}
Json to_json(const hilbert::CurveClass& c);
Json to_json(const hilbert::SpecialClass& c);
Json to_json(const hilbert::LagrangianReport& r);
/// {"p", "k", "status", "rays": [{"a", "y"}], "q", "notes"}
Json to_json(const hilbert::RayReport& r);
Json to_json(const hilbert::HtReport& r);
Json to_json(const hilbert::ScanRow& r);

}  // namespace k3g::report
