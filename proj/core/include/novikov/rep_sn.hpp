#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "novikov/magma.hpp"
#include "novikov/novikov.hpp"
#include "novikov/rational.hpp"

namespace novikov {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

/// All partitions of n, (n) first, reverse lexicographic.
std::vector<Partition> partitions(int n);
/// "V3", "V21", "V2,1,1"-style labels are parsed by parse_partition; this prints "V_{3,1}".
std::string partition_label(const Partition& p);
/// Accepts "3,1", "(3,1)", "V31", "V_{3,1}".
Partition parse_partition(std::string_view text);

/// chi_lambda(mu) by border-strip removal; memoized. Sizes must agree (<= 12).
long character(const Partition& lambda, const Partition& mu);
/// Hook length formula.
long hook_dim(const Partition& lambda);
/// n! / prod(i^{m_i} m_i!).
Rational class_size(const Partition& mu);
/// Cycle type of a permutation given as images perm[i-1] of i.
Partition cycle_type(const std::vector<int>& perm);
/// Permutation with consecutive cycles of the given lengths.
std::vector<int> class_representative(const Partition& mu);

/// Multiplicities of irreducibles, (n) first; zero multiplicities omitted.
struct ModuleDecomposition {
    int n = 0;
    std::vector<std::pair<Partition, long>> modules;

    [[nodiscard]] long multiplicity(const Partition& p) const;
    [[nodiscard]] long dimension() const;
    /// "V_{3}^2 + V_{2,1}" or "0".
    [[nodiscard]] std::string str() const;
    friend bool operator==(const ModuleDecomposition&, const ModuleDecomposition&) = default;
};

/// Decomposes a class function given by its value on each cycle type.
/// Throws ConsistencyError unless every multiplicity is a nonnegative integer.
ModuleDecomposition decompose_class_function(int n, const std::map<Partition, Rational>& trace);
/// Trace of the permutation on Nov(n) (fixed monomials) minus its trace on I(n).
Rational quotient_trace(const IdealBasis& ideal, int n, const std::vector<int>& perm);
ModuleDecomposition decompose(const IdealBasis& ideal, int n);

struct DistributivityResult {
    bool distributive = true;
    std::optional<std::pair<int, Partition>> first_failure;
};

DistributivityResult is_distributive(const IdealBasis& ideal, int max_arity);
DistributivityResult is_distributive(const std::vector<MagPoly>& generators, int max_arity,
                                     const ClosureOptions& options = {});

std::string to_json(const ModuleDecomposition& d);
ModuleDecomposition decomposition_from_json(std::string_view text);

} // namespace novikov
