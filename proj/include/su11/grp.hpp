#pragma once

// SU(1,1) elements g = [[a, b], [conj(b), conj(a)]] with |a|^2 - |b|^2 = 1,
// and the Cartan factorization g = k(phi) h(alpha) k(psi).

#include <complex>
#include <cstdint>
#include <random>
#include <utility>

#include <nlohmann/json.hpp>

#include "su11/fock.hpp"

namespace su11::grp {

using cplx = std::complex<double>;

class GroupElement {
 public:
  GroupElement() = default;
  /// Rescales (a, b) onto |a|^2 - |b|^2 = 1; throws DomainError if the
  /// pair is not timelike (|a| <= |b|).
  GroupElement(cplx a, cplx b);

  cplx a() const { return a_; }
  cplx b() const { return b_; }
  double constraint_residual() const;

 private:
  cplx a_{1.0, 0.0};
  cplx b_{};
};

struct CartanAngles {
  double phi = 0.0;
  double alpha = 0.0;
  double psi = 0.0;
};

struct Decomposition {
  CartanAngles angles;
  /// cartan_compose(angles) reproduces -g instead of g (double-cover sign).
  bool sign_flag = false;
  double roundtrip_residual = 0.0;
};

GroupElement identity();
GroupElement h(double alpha);
GroupElement k(double phi);
GroupElement compose(const GroupElement& g1, const GroupElement& g2);
GroupElement inverse(const GroupElement& g);
/// Transpose [[a, conj b], [b, conj a]]; the action that conjugation by the
/// Cartan-product U(g) realizes on (z, z*).
GroupElement transpose(const GroupElement& g);

GroupElement cartan_compose(const CartanAngles& c);
/// alpha = 2 asinh|b|; phi, psi reduced to [0, 4pi); psi = 0 when b = 0.
Decomposition cartan_decompose(const GroupElement& g);

/// max(|a1-a2|, |b1-b2|)
double distance(const GroupElement& g1, const GroupElement& g2);

/// (gz, gz*) = (a z + b z*, conj(b) z + conj(a) z*).
std::pair<fock::FockOperator, fock::FockOperator> act_on_generators(const GroupElement& g,
                                                                    const fock::FockSpace& space);

/// phi, psi uniform on [0, 4pi), alpha uniform on [0, alpha_max].
CartanAngles random_angles(std::mt19937_64& rng, double alpha_max);

nlohmann::json to_json(const GroupElement& g);
nlohmann::json to_json(const CartanAngles& c);
GroupElement group_from_json(const nlohmann::json& j);
CartanAngles angles_from_json(const nlohmann::json& j);

}  // namespace su11::grp
