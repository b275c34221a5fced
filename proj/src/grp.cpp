#include "su11/grp.hpp"

#include <cmath>
#include <numbers>

#include "su11/error.hpp"

namespace su11::grp {

namespace {
constexpr double kFourPi = 4.0 * std::numbers::pi;

double reduce_4pi(double x) {
  double r = std::fmod(x, kFourPi);
  if (r < 0) r += kFourPi;
  if (r >= kFourPi) r -= kFourPi;
  return r;
}

double unit_interval(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }
}  // namespace

GroupElement::GroupElement(cplx a, cplx b) {
  double q = std::norm(a) - std::norm(b);
  if (!(q > 0.0)) throw DomainError("GroupElement: |a|^2 - |b|^2 must be positive");
  double s = std::sqrt(q);
  a_ = a / s;
  b_ = b / s;
}

double GroupElement::constraint_residual() const {
  return std::abs(std::norm(a_) - std::norm(b_) - 1.0);
}

GroupElement identity() { return {}; }
GroupElement h(double alpha) { return {std::cosh(alpha / 2), std::sinh(alpha / 2)}; }
GroupElement k(double phi) { return {std::polar(1.0, phi / 2), 0.0}; }

GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
  return {g1.a() * g2.a() + g1.b() * std::conj(g2.b()),
          g1.a() * g2.b() + g1.b() * std::conj(g2.a())};
}

GroupElement inverse(const GroupElement& g) { return {std::conj(g.a()), -g.b()}; }

GroupElement transpose(const GroupElement& g) { return {g.a(), std::conj(g.b())}; }

GroupElement cartan_compose(const CartanAngles& c) {
  return {std::polar(std::cosh(c.alpha / 2), (c.phi + c.psi) / 2),
          std::polar(std::sinh(c.alpha / 2), (c.phi - c.psi) / 2)};
}

double distance(const GroupElement& g1, const GroupElement& g2) {
  return std::max(std::abs(g1.a() - g2.a()), std::abs(g1.b() - g2.b()));
}

Decomposition cartan_decompose(const GroupElement& g) {
  Decomposition out;
  const double rb = std::abs(g.b());
  // asinh|b| is well conditioned near the identity, acosh|a| is not
  out.angles.alpha = 2.0 * std::asinh(rb);
  const double arg_a = std::arg(g.a());
  if (rb == 0.0) {
    out.angles.phi = reduce_4pi(2.0 * arg_a);
    out.angles.psi = 0.0;
  } else {
    const double arg_b = std::arg(g.b());
    out.angles.phi = reduce_4pi(arg_a + arg_b);
    out.angles.psi = reduce_4pi(arg_a - arg_b);
  }
  GroupElement back = cartan_compose(out.angles);
  double plus = distance(back, g);
  double minus = std::max(std::abs(back.a() + g.a()), std::abs(back.b() + g.b()));
  out.sign_flag = minus < plus;
  out.roundtrip_residual = std::min(plus, minus);
  return out;
}

std::pair<fock::FockOperator, fock::FockOperator> act_on_generators(const GroupElement& g,
                                                                    const fock::FockSpace& space) {
  fock::FockOperator z = fock::annihilation(space);
  fock::FockOperator zs = fock::creation(space);
  return {g.a() * z + g.b() * zs, std::conj(g.b()) * z + std::conj(g.a()) * zs};
}

CartanAngles random_angles(std::mt19937_64& rng, double alpha_max) {
  CartanAngles c;
  c.phi = kFourPi * unit_interval(rng);
  c.alpha = alpha_max * unit_interval(rng);
  c.psi = kFourPi * unit_interval(rng);
  return c;
}

nlohmann::json to_json(const GroupElement& g) {
  return {{"re_a", g.a().real()}, {"im_a", g.a().imag()},
          {"re_b", g.b().real()}, {"im_b", g.b().imag()}};
}

nlohmann::json to_json(const CartanAngles& c) {
  return {{"phi", c.phi}, {"alpha", c.alpha}, {"psi", c.psi}};
}

GroupElement group_from_json(const nlohmann::json& j) {
  return {cplx{j.at("re_a").get<double>(), j.at("im_a").get<double>()},
          cplx{j.at("re_b").get<double>(), j.at("im_b").get<double>()}};
}

CartanAngles angles_from_json(const nlohmann::json& j) {
  return {j.at("phi").get<double>(), j.at("alpha").get<double>(), j.at("psi").get<double>()};
}

}  // namespace su11::grp
