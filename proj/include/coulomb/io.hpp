#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "coulomb/abelian.hpp"
#include "coulomb/report.hpp"
#include "coulomb/series.hpp"
#include "coulomb/theory.hpp"

namespace coulomb {

/// Series as {"x_rank", "order", "terms": [{"t", "x", "num", "den"}, ...]}
/// in canonical term order. Numerators/denominators that do not fit in 64
/// bits are emitted as decimal strings.
nlohmann::json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

/// Theory as {"factors", "flavor_rank", "matter": [{"gauge", "flavor"}]}.
nlohmann::json theory_to_json(const TheorySpec& t);
TheorySpec theory_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const CheckReport& r);
nlohmann::json element_to_json(const RingElement& e);

/// A parsed theory plus the optional defaults a spec file may carry.
struct SpecFile {
    TheorySpec theory;
    std::optional<std::vector<int64_t>> kappa;
    std::optional<int64_t> order;
};

/// Resolves a --spec argument: a preset shorthand ("sqed:2", "jordan:3",
/// "two-node:2,3", "trivial") or a path to a JSON theory file, which may
/// also carry "kappa" and "order" keys.
SpecFile resolve_spec(const std::string& spec);
TheorySpec resolve_theory(const std::string& spec);

}  // namespace coulomb
