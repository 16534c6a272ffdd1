#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include <aginv/invariants.hpp>

namespace aginv::cli {

// Every number in a report is computed once and rendered by both the text
// and JSON writers, so the two formats always carry identical values.
struct GroupReport {
    GroupDescriptor descriptor;
    Pi1Report pi1;
    HomotopySequenceRanks bounds;
    std::optional<Int> n;
    std::optional<FinGenAbGroup> torsion;
    std::optional<CohomologyProfile> profile;
    std::optional<BerkovichReport> berkovich;
    std::optional<Int> ell;
    std::optional<Int> brauer_corank;
};

struct HomSpaceReport {
    HomSpaceDescriptor descriptor;
    HomSpacePi1Bound bounds;
};

// Descriptor must already be validated.
GroupReport compute_group_report(const GroupDescriptor& d, const std::optional<Int>& n,
                                 const std::optional<Int>& ell);
HomSpaceReport compute_homspace_report(const HomSpaceDescriptor& d);

nlohmann::json to_json(const GroupReport& report);
nlohmann::json to_json(const HomSpaceReport& report);
std::string render_text(const GroupReport& report);
std::string render_text(const HomSpaceReport& report);

nlohmann::json group_to_json(const FinGenAbGroup& g);

}  // namespace aginv::cli
