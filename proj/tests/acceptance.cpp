// Acceptance criteria 1-11.  One PASS/FAIL line each; exit status is the
// number of failed criteria, capped at 1.

#include <CLI11.hpp>

#include <iostream>

#include "hhodge/selftest.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"hhodge acceptance criteria"};
    int only = 0;
    bool verbose = false;
    app.add_option("--only", only, "run a single criterion")->check(CLI::Range(1, 11));
    app.add_flag("--verbose", verbose, "print notes");
    CLI11_PARSE(app, argc, argv);

    int failed = 0;
    for (const auto& c : hhodge::acceptance_criteria()) {
        if (only != 0 && c.id != only) continue;
        if (!hhodge::report_criterion(std::cout, c, verbose)) ++failed;
    }
    std::cout << (failed == 0 ? "acceptance: all criteria passed" : "acceptance: " + std::to_string(failed) + " criteria failed")
              << "\n";
    return failed == 0 ? 0 : 1;
}
