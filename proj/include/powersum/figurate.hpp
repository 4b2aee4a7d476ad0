#pragma once

// Sums of powers, Bernoulli numbers, and the registry of displayed
// identities, each evaluated exactly on both sides.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "powersum/exact.hpp"

namespace powersum::figurate {

using exact::BigInt;
using exact::QuadExt;
using exact::Rat;

/// sum_{k=1}^{n} k^p by literal summation.
BigInt sum_powers_bruteforce(unsigned p, long n);

/// sum_{k=lo}^{hi} k^p by literal summation; zero when lo > hi.
BigInt sum_powers_range(unsigned p, long lo, long hi);

BigInt binomial(unsigned n, unsigned k);

/// B_m with B_1 = +1/2, from sum_{i=0}^{m} C(m+1, i) B_i = m + 1.
/// Memoized; safe to call from several threads.
Rat bernoulli(unsigned m);

/// Closed form (1/(p+1)) sum_j C(p+1, j) B_j n^{p+1-j}.
Rat faulhaber(unsigned p, long n);

enum class Identity {
    OddSumSquare,
    Triangular,
    SumSquares,
    Archimedes,
    Nicomachus,
    SquaresHalf,
    CubesClosed,
    FourthFactored,
    FourthIntegerForm,
    RowsCols,
    Truncated,
    AlmostSquare,
    FourthAsSqTimesSq,
    ArchimedesGen,
    Step2Split,
    ScissorFactor,
    TopLayerDouble,
    RBalance,
    FinalAssembly,
};

/// Registry order.
const std::vector<Identity>& all_identities();

/// Upper-case registry names, e.g. "ODD_SUM_SQUARE".
std::string_view identity_name(Identity id);
std::optional<Identity> identity_from_name(std::string_view name);

/// Parameter names the identity reads, drawn from {"p", "m", "n"}.
const std::vector<std::string>& identity_parameters(Identity id);

using Params = std::map<std::string, long>;

struct IdentityReport {
    Identity identity;
    Params parameters;
    QuadExt lhs;
    QuadExt rhs;
    bool holds = false;

    /// e.g. "NICOMACHUS(n=6): 441 = 441 holds"
    std::string to_string() const;
};

class MissingParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ConstraintViolated : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

IdentityReport evaluate_identity(Identity id, const Params& params);

/// sum_{k=1}^{n} (2k-1) k^2, the cell count of the excess layer.
BigInt excess_layer_count(long n);

/// n (n+1) (n+1/2) (n-x)(n+1+x) evaluated in Q(sqrt 21), x = strip_root().
QuadExt final_assembly_rhs(long n);

}  // namespace powersum::figurate
