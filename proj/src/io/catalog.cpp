#include "maxtorus/catalog.hpp"

#include "maxtorus/lattice.hpp"

namespace maxtorus::catalog {

namespace {

Fan lattice_fan(std::size_t dim, std::vector<IntegerVector> rays, std::vector<IndexSet> one_based) {
  for (auto& c : one_based)
    for (auto& i : c) --i;
  return Fan::from_integer_rays(dim, rays, std::move(one_based));
}

}  // namespace

Fan cp1_fan() { return lattice_fan(1, {{1}, {-1}}, {{1}, {2}}); }

Fan cp2_fan() { return lattice_fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{1, 2}, {1, 3}, {2, 3}}); }

Fan cp1xcp1_fan() {
  return lattice_fan(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
}

Fan fulton7_fan() {
  return lattice_fan(3,
                     {{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}, {1, 1, 1}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}},
                     {{1, 2, 3}, {1, 2, 6}, {1, 3, 5}, {1, 5, 6}, {2, 3, 7},
                      {2, 6, 7}, {3, 5, 7}, {4, 5, 6}, {4, 5, 7}, {4, 6, 7}});
}

Fan orthant_fan(std::size_t n) {
  std::vector<IntegerVector> rays;
  IndexSet cone;
  for (std::size_t i = 0; i < n; ++i) {
    IntegerVector e(n);
    e[i] = 1;
    rays.push_back(e);
    cone.push_back(i + 1);
  }
  return lattice_fan(n, rays, {cone});
}

Fan hopf_fan() { return lattice_fan(3, {{1, 0, 0}, {0, 1, 0}}, {{1}, {2}}); }

ComplexSubspace hopf_subspace() { return hopf_subspace({0, 1}, {0, 1}, {-1, 0}); }

ComplexSubspace hopf_subspace(const GaussianRational& a1, const GaussianRational& a2,
                              const GaussianRational& a3) {
  return ComplexSubspace(3, {{a1, a2, a3}});
}

SimplicialComplex triangle_boundary() { return SimplicialComplex::make(3, {{0, 1}, {0, 2}, {1, 2}}); }

SimplicialComplex moment_angle_cube_complex() {
  std::vector<IndexSet> faces;
  for (std::size_t a : {0, 1})
    for (std::size_t b : {2, 3})
      for (std::size_t c : {4, 5}) faces.push_back({a, b, c});
  return SimplicialComplex::make(7, std::move(faces));
}

ComplexSubspace moment_angle_cube_subspace() {
  const GaussianRational o(0), l(1), i(0, 1);
  return ComplexSubspace(7, {{l, l, o, o, o, o, i}, {o, o, l, l, i, i, o}});
}

Fan flip7_fan() {
  return lattice_fan(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}, {-1, -1, -2}, {-2, -1, 0}, {2, 2, 1}},
                     {{1, 3, 4}, {1, 4, 5}, {1, 2, 5}, {3, 4, 6}, {1, 3, 7},
                      {1, 2, 7}, {2, 5, 6}, {4, 5, 6}, {2, 6, 7}, {3, 6, 7}});
}

Instance coordinate_presentation(const Fan& target) {
  const std::size_t m = target.ray_count();
  const IntegerMatrix v = to_integer(target.rays.transpose());
  std::vector<IntegerVector> kernel = integer_kernel(v);
  std::size_t total = m;
  if (kernel.size() % 2 == 1) {
    ++total;
    for (auto& k : kernel) k.push_back(0);
    IntegerVector ghost(total);
    ghost[m] = 1;
    kernel.push_back(ghost);
  }
  std::vector<GaussianVector> basis;
  for (std::size_t j = 0; j + 1 < kernel.size(); j += 2) {
    GaussianVector z(total);
    for (std::size_t t = 0; t < total; ++t) z[t] = {Rational(kernel[j][t]), Rational(kernel[j + 1][t])};
    basis.push_back(z);
  }
  const SimplicialComplex k = SimplicialComplex::make(total, target.max_cones);
  return {fan_from_complex(k), ComplexSubspace(total, basis)};
}

}  // namespace maxtorus::catalog
