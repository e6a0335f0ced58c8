#include "coulomb/abelian.hpp"
#include "coulomb/quadric.hpp"

namespace coulomb {

CheckReport sl3_cross_check() {
    CheckReport report;
    report.name = "sl3-example cross check";

    // Quadric side: every displayed relation in normal form.
    for (auto& c : verify_example_relations().cases) report.cases.push_back(std::move(c));
    for (auto& c : verify_section_vanishing().cases) report.cases.push_back(std::move(c));

    // Ring side at w = (1,1): the same relations through the weight pairing.
    CheckReport ring = verify_computation_relations(1, 1);
    for (auto& c : ring.cases) {
        c.id = "ring " + c.id;
        report.cases.push_back(std::move(c));
    }

    // Structural identities tying the section classes to r^{m,n}:
    // ^a r^{1,0} = y_j^a, ^a r^{1,1} = 'y_j^a, ^a r^{0,0} = z_j^a.
    const TheorySpec t = preset_two_node(1, 1);
    for (int a = 0; a <= 1; ++a) {
        const std::string suf = " (a=" + std::to_string(a) + ")";
        report.add("^a r^{1,0} == y_j^a" + suf,
                   two_node_r(t, 1, 0, a) == two_node_section(t, "y_j", a));
        report.add("^a r^{1,1} == 'y_j^a" + suf,
                   two_node_r(t, 1, 1, a) == two_node_section(t, "'y_j", a));
        report.add("^a r^{0,0} == z_j^a" + suf,
                   two_node_r(t, 0, 0, a) == two_node_section(t, "z_j", a));
    }
    return report;
}

}  // namespace coulomb
