#pragma once

#include "lglab/catalog.hpp"

#include <json.hpp>

namespace lglab::io {

using json = nlohmann::json;

json rationals(const std::vector<Rational>& v);
json period_report(const PeriodSequence& s);
json operator_report(const DifferentialOperator& L, int terms, const Rational& shift);
json point_report(const PointAnalysis& p, const Rational& shift);
json monodromy_report(const DifferentialOperator& L, const std::vector<PointAnalysis>& points, const Rational& shift);
json pencil_report(const QuarticPencil& p, const BaseLocusReport& base, const FixedSingularLocus& fixed);
json fiber_report(const FiberReport& f);
json verdict_report(const Verdict& v);
json sweep_report(const SweepReport& s);
json catalog_report(const std::vector<FamilyRecord>& catalog);

std::string dump(const json& j);

}  // namespace lglab::io
