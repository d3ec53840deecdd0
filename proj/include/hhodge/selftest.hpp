#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hhodge/group.hpp"

namespace hhodge {

struct CheckResult {
    bool passed = true;
    std::size_t checks = 0;
    std::vector<std::string> notes;     // informational lines
    std::vector<std::string> failures;  // one line per failed check

    void expect(bool ok, std::string failure);
};

struct AcceptanceCriterion {
    int id;
    std::string title;
    std::function<CheckResult()> run;
};

/// The full acceptance corpus, numbered 1..11.
const std::vector<AcceptanceCriterion>& acceptance_criteria();

/// Text of the bundled S3 group file.
std::string_view bundled_s3_group_text();

/// Forgetting tails, cutting loops and cutting trees for Omega over
/// genus <= max_genus and at most max_points points; for abelian groups also
/// the character sum against the monodromy count for up to max_points + 1 points.
CheckResult omega_properties(const FiniteGroup& g, unsigned max_genus, unsigned max_points);

struct SelftestOptions {
    std::optional<std::string> group;  // builtin z<N> or a group file
    std::optional<std::filesystem::path> cache_file;
    std::optional<int> only;
    bool verbose = false;
};

/// Prints one PASS/FAIL line per item.  Returns 0 if everything passed, 2 for
/// a cache entry that disagrees with a fresh evaluation, 1 otherwise.
int run_selftest(std::ostream& out, const SelftestOptions& options);

/// Runs one criterion and prints "[PASS] N title (k checks)" plus failure lines.
bool report_criterion(std::ostream& out, const AcceptanceCriterion& c, bool verbose);

}  // namespace hhodge
