// A conduction electron on a nanoscale elliptical ring: reduce the geometry
// to the dimensionless deformation, solve the Hermitian model, and report the
// lowest levels in electron volts.

#include <cstdio>

#include <epath/epath.hpp>

int main() {
  using namespace epath;

  const PhysicalEllipse ring{20e-9, 28e-9, 9.1093837015e-31};  // a, b in meters
  const Nondimensional reduced = nondimensionalize(ring);
  constexpr double joule_per_ev = 1.602176634e-19;

  std::printf("semi-axes a = %g m, b = %g m  ->  xi = %.6f\n", ring.a, ring.b, reduced.xi);
  std::printf("energy scale hbar^2 / (2 m a^2) = %.6e eV\n\n",
              reduced.energy_scale / joule_per_ev);

  const std::vector<MergedLevel> levels =
      merged_spectrum(ModelKind::PathHermitian, reduced.xi, 14, 8);
  std::printf("%-6s %-8s %-6s %-14s %-12s %s\n", "index", "class", "n", "E (reduced)",
              "E (micro-eV)", "paired");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const MergedLevel& lvl = levels[i];
    std::printf("%-6zu %-8s %-6ld %-14s %-12.6f %s\n", i, class_signs(lvl.symmetry),
                lvl.unperturbed_index, table_number(lvl.energy).c_str(),
                lvl.energy * reduced.energy_scale / joule_per_ev * 1e6,
                lvl.paired_with_previous ? "yes" : "");
  }
  return 0;
}
