#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qder/finite_field.hpp"
#include "qder/formulas.hpp"
#include "qder/rational.hpp"
#include "qder/report.hpp"

namespace qder {

enum class FormKind { hermitian, alternating, quadratic };

struct FormSpec {
    FormKind kind = FormKind::quadratic;
    int dim = 0;
    std::vector<int> gram;   // dim x dim entries over the matrix field
    std::string witt_label;  // "0", "1", "delta", "omega" for quadratic forms
};

struct OracleOptions {
    long long budget = 30'000'000;  // bound on |GL_dim(q^e)|
    int threads = 0;
    bool odd_delta_gram = false;  // O-odd only: use the delta-scaled Gram
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A concrete finite classical group with all elements materialized.
struct GroupInstance {
    Family family;
    int m = 0;  // family index
    int q = 0;  // base field size
    int dim = 0;
    int e = 1;
    SmallField field;        // entry field of size q^e
    std::vector<int> conj;   // entrywise conjugation (identity unless hermitian)
    FormSpec form;
    std::vector<std::vector<std::uint8_t>> elements;
    std::vector<int> dim_ker;      // dim ker(a - 1), per element
    std::vector<char> is_unipotent;
    BigInt order;
};

FormSpec make_form(Family f, int m, int q, const SmallField& field, bool odd_delta_gram);

// Enumerates the isometry group by row-by-row search (pruned by linear
// independence and the partial form constraints) and validates the element
// count against the order formula. Throws BudgetExceeded when |GL| is above
// the budget, and std::invalid_argument for even q in the Sp/O families.
GroupInstance build_group(Family f, int m, int q, const OracleOptions& opts = {});

// 1 - (1/|X|) sum_a q^{-e dim ker(a-1)}; with p_power_only, the same sum
// restricted to unipotent linear parts (the p-power derangement proportion).
BigRational delta_oracle(const GroupInstance& g, bool p_power_only);

// Fully literal recount: for every pair (a, v) scan all u for a fixed point.
// Guarded to |AX| <= 1e5. Also cross-checks the per-element derangement count
// against q^{em} - q^{e rank(a-1)}.
BigRational literal_delta_oracle(const GroupInstance& g, bool p_power_only);
bool literal_oracle_feasible(const GroupInstance& g);

BigInt unipotent_count(const GroupInstance& g);

// Exact oracle-vs-formula comparison records (plus the per-sign sum and
// difference consistency checks for the even orthogonal families).
std::vector<Record> compare_with_formula(Family f, int m, int q, bool p_power,
                                         const OracleOptions& opts = {});

}  // namespace qder
