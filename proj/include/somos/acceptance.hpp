#ifndef SOMOS_ACCEPTANCE_HPP
#define SOMOS_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace somos::acceptance {

// One reproduction criterion: every tolerance is pinned in code, the
// wall-clock bound included.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    double time_limit = 0;
    std::vector<std::string> details; // "quantity: expected vs computed (tol ...)"
};

// Runs criterion `id` (1..10); seed feeds the randomized property batches.
CriterionResult run_criterion(int id, unsigned seed = 12345);

std::vector<CriterionResult> run_all(unsigned seed = 12345);

// Render one pass/fail line per criterion (the `paper reproduce` table).
std::string format_table(const std::vector<CriterionResult> &results);

}

#endif
