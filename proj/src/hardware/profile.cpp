#include "qdba/hardware/profile.hpp"

#include <string>

#include "qdba/error.hpp"
#include "qdba/quantum/physics.hpp"

namespace qdba::hardware {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double superconducting_gamma2(const SuperconductingProfile& p, double transit) {
  if (p.gamma2_override) return *p.gamma2_override;
  return quantum::decoherence_params(transit, p.t1, p.t2).gamma2;
}

}  // namespace

std::string_view profile_name(const HardwareProfile& profile) {
  return std::visit(Overloaded{[](const LogicalProfile&) { return std::string_view("logical"); },
                               [](const SuperconductingProfile&) {
                                 return std::string_view("superconducting");
                               },
                               [](const PhotonicProfile&) {
                                 return std::string_view("photonic");
                               }},
                    profile);
}

void validate(const HardwareProfile& profile) {
  std::visit(Overloaded{
                 [](const LogicalProfile& p) { quantum::validate(p.pauli); },
                 [](const SuperconductingProfile& p) {
                   if (!(p.transit >= 0.0)) throw ParameterError("transit must be non-negative");
                   quantum::decoherence_params(p.transit, p.t1, p.t2);
                   if (p.gamma2_override &&
                       !(*p.gamma2_override >= 0.0 && *p.gamma2_override <= 1.0)) {
                     throw ParameterError("gamma2 override must be in [0,1]");
                   }
                 },
                 [](const PhotonicProfile& p) {
                   if (!(p.alpha_db_per_km >= 0.0)) {
                     throw ParameterError("attenuation must be non-negative");
                   }
                   if (!(p.length_km > 0.0)) throw ParameterError("fiber length must be positive");
                   if (p.loss_mode == des::LossMode::None) {
                     throw ParameterError("photonic loss mode must be heralded or unheralded");
                   }
                   if (p.loss_mode == des::LossMode::Heralded &&
                       quantum::survival_probability(p.alpha_db_per_km, p.length_km) <= 0.0) {
                     throw ParameterError("heralded loss with zero survival never completes");
                   }
                 },
             },
             profile);
}

std::vector<des::NoiseHook> noise_hooks_for(const HardwareProfile& profile, Side side,
                                            double transit) {
  return std::visit(
      Overloaded{
          [side](const LogicalProfile& p) -> std::vector<des::NoiseHook> {
            if (side == Side::Commander) return {};
            return {quantum::pauli_channel(p.pauli)};
          },
          [transit](const SuperconductingProfile& p) -> std::vector<des::NoiseHook> {
            const double gamma1 = quantum::decoherence_params(transit, p.t1, p.t2).gamma1;
            return {quantum::amplitude_damping_channel(gamma1),
                    quantum::dephasing_channel(superconducting_gamma2(p, transit))};
          },
          [](const PhotonicProfile& p) -> std::vector<des::NoiseHook> {
            return {des::LossRule{quantum::survival_probability(p.alpha_db_per_km, p.length_km)}};
          },
      },
      profile);
}

Network build_network(const HardwareProfile& profile, const protocol::IndexScheme& scheme) {
  validate(profile);
  Network net;
  double delay = 0.0;
  std::vector<des::NoiseHook> commander_transit;
  std::vector<des::NoiseHook> lieutenant_transit;

  if (std::holds_alternative<LogicalProfile>(profile)) {
    net.commander_pre_measurement = noise_hooks_for(profile, Side::Commander, 0.0);
    net.lieutenant_pre_measurement = noise_hooks_for(profile, Side::Lieutenant, 0.0);
  } else if (const auto* sc = std::get_if<SuperconductingProfile>(&profile)) {
    delay = sc->transit;
    commander_transit = noise_hooks_for(profile, Side::Commander, sc->transit);
    lieutenant_transit = noise_hooks_for(profile, Side::Lieutenant, sc->transit);
  } else {
    const auto& ph = std::get<PhotonicProfile>(profile);
    delay = ph.length_km / kFiberKmPerSecond;
    commander_transit = noise_hooks_for(profile, Side::Commander, 0.0);
    lieutenant_transit = noise_hooks_for(profile, Side::Lieutenant, 0.0);
    net.loss_mode = ph.loss_mode;
  }

  const int source = distributor_node(scheme);
  net.commander_link = {source, commander_node(scheme), delay, commander_transit, net.loss_mode};
  for (int i = 0; i < scheme.lieutenants(); ++i) {
    net.lieutenant_links.push_back({source, i, delay, lieutenant_transit, net.loss_mode});
  }
  return net;
}

}  // namespace qdba::hardware
