#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bohrlab/families.hpp"
#include "bohrlab/series.hpp"

namespace bohr {

// Outcome of one sampled property.
struct PropertyResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t violations = 0;
    // Largest amount by which a checked quantity exceeded its allowance
    // (negative: the smallest slack seen when nothing was violated).
    double worst = -1e300;
    // First violation, if any.
    std::string detail;

    bool passed() const { return violations == 0 && cases > 0; }
};

struct PropertyConfig {
    std::uint64_t seed = 20240601;
    std::size_t order = kDefaultOrder;
    // Multiplies every sample count (CLI --quick uses a fraction).
    double scale = 1.0;
};

// Independent 64-bit seed for sample i of a named stream.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index);

// Phi (g o w) test triple with closed forms kept for the oracle:
// Phi is a finite Blaschke product, g a class-B polynomial (Fejer mean of a
// Blaschke product) and w = z * inner(z) with inner a finite Blaschke product.
struct QuasiTriple {
    BlaschkeProduct phi;
    TruncatedSeries g;
    BlaschkeProduct inner;

    TruncatedSeries phi_series(std::size_t order) const { return phi.series(order); }
    TruncatedSeries w_series(std::size_t order) const;
};
QuasiTriple random_quasi_triple(std::uint64_t seed, std::size_t order = kDefaultOrder);

// Suite names: lemmas, radii, quasisub, harmonic, oracle.
const std::vector<std::string_view>& property_suite_names();
std::vector<PropertyResult> run_property_suite(std::string_view suite, const PropertyConfig& config = {});

// Individual suites, also used directly by the acceptance runner.
std::vector<PropertyResult> lemma_properties(const PropertyConfig& config);
std::vector<PropertyResult> radii_properties(const PropertyConfig& config);
std::vector<PropertyResult> quasisub_properties(const PropertyConfig& config);
std::vector<PropertyResult> harmonic_properties(const PropertyConfig& config);
std::vector<PropertyResult> oracle_properties(const PropertyConfig& config);

// Single properties behind the acceptance criteria.
PropertyResult head_radius_property(const PropertyConfig& config);        // 500 samples x 4 exponents
PropertyResult quasi_subordination_property(const PropertyConfig& config); // 200 triples
PropertyResult oracle_equivalence_property(const PropertyConfig& config);
PropertyResult power_ratio_monotonicity_property();
PropertyResult head_radius_monotonicity_property();

} // namespace bohr
