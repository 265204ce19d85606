#include <doctest.h>

#include <cmath>
#include <variant>

#include "qdba/error.hpp"
#include "qdba/hardware/profile.hpp"
#include "qdba/quantum/physics.hpp"

using namespace qdba;
using namespace qdba::hardware;

namespace {

const quantum::KrausChannel& channel_at(const std::vector<des::NoiseHook>& hooks, std::size_t k) {
  return std::get<quantum::KrausChannel>(hooks.at(k));
}

}  // namespace

TEST_SUITE("hardware") {

TEST_CASE("profile names") {
  CHECK(profile_name(LogicalProfile{}) == "logical");
  CHECK(profile_name(SuperconductingProfile{}) == "superconducting");
  CHECK(profile_name(PhotonicProfile{}) == "photonic");
}

TEST_CASE("logical profile: Pauli noise on lieutenants before measurement") {
  const protocol::IndexScheme s(4, 8);
  const Network net = build_network(LogicalProfile{{0.9, 0.1, 0.0, 0.0}}, s);
  CHECK(net.commander_pre_measurement.empty());
  REQUIRE(net.lieutenant_pre_measurement.size() == 1);
  CHECK(channel_at(net.lieutenant_pre_measurement, 0).kind() == quantum::ChannelKind::Pauli);
  CHECK(net.commander_link.delay == 0.0);
  CHECK(net.commander_link.hooks.empty());
  CHECK(net.commander_link.to == commander_node(s));
  CHECK(net.commander_link.from == distributor_node(s));
  REQUIRE(net.lieutenant_links.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(net.lieutenant_links[i].to == i);
  CHECK(net.loss_mode == des::LossMode::None);
}

TEST_CASE("superconducting profile: damping then dephasing in transit") {
  const protocol::IndexScheme s(3, 4);
  const SuperconductingProfile p{0.05e-3, 0.05e-3, 0.01e-3, std::nullopt};
  const Network net = build_network(p, s);
  CHECK(net.commander_link.delay == p.transit);
  REQUIRE(net.commander_link.hooks.size() == 2);
  const auto& ad = channel_at(net.commander_link.hooks, 0);
  const auto& deph = channel_at(net.commander_link.hooks, 1);
  CHECK(ad.kind() == quantum::ChannelKind::AmplitudeDamping);
  CHECK(deph.kind() == quantum::ChannelKind::Dephasing);
  const auto g = quantum::decoherence_params(p.transit, p.t1, p.t2);
  CHECK(std::norm(ad.operators()[1](0, 1)) == doctest::Approx(g.gamma1));
  CHECK(std::norm(deph.operators()[1](1, 1)) == doctest::Approx(g.gamma2));
  CHECK(net.lieutenant_links[1].hooks.size() == 2);
  CHECK(net.lieutenant_pre_measurement.empty());

  SuperconductingProfile forced = p;
  forced.gamma2_override = 1.0;
  const auto hooks = noise_hooks_for(forced, Side::Lieutenant, p.transit);
  CHECK(std::norm(channel_at(hooks, 1).operators()[1](1, 1)) == doctest::Approx(1.0));
}

TEST_CASE("photonic profile: loss rule and fiber delay") {
  const protocol::IndexScheme s(3, 4);
  const PhotonicProfile p{0.02, 100.0, des::LossMode::Heralded};
  const Network net = build_network(p, s);
  CHECK(net.loss_mode == des::LossMode::Heralded);
  CHECK(net.commander_link.delay == doctest::Approx(100.0 / 2.0e5));
  REQUIRE(net.lieutenant_links[0].hooks.size() == 1);
  const auto& rule = std::get<des::LossRule>(net.lieutenant_links[0].hooks[0]);
  CHECK(rule.survival == doctest::Approx(std::pow(10.0, -0.2)));
  CHECK(net.lieutenant_links[0].loss_mode == des::LossMode::Heralded);
}

TEST_CASE("profile validation") {
  CHECK_THROWS_AS(validate(LogicalProfile{{0.5, 0.0, 0.0, 0.0}}), ParameterError);
  CHECK_THROWS_AS(validate(SuperconductingProfile{1.0, 3.0, 0.0, std::nullopt}), ConstraintError);
  CHECK_THROWS_AS(validate(SuperconductingProfile{1.0, 1.0, -1.0, std::nullopt}), ParameterError);
  CHECK_THROWS_AS(validate(SuperconductingProfile{1.0, 1.0, 0.0, 1.5}), ParameterError);
  CHECK_THROWS_AS(validate(PhotonicProfile{0.02, 0.0, des::LossMode::Unheralded}), ParameterError);
  CHECK_THROWS_AS(validate(PhotonicProfile{-0.02, 1.0, des::LossMode::Unheralded}), ParameterError);
  CHECK_THROWS_AS(validate(PhotonicProfile{0.02, 1.0, des::LossMode::None}), ParameterError);
  CHECK_NOTHROW(validate(PhotonicProfile{0.02, 1.0, des::LossMode::Heralded}));
}

}  // TEST_SUITE
