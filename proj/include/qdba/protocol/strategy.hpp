#pragma once

#include <memory>
#include <span>
#include <vector>

#include "qdba/des/rng.hpp"
#include "qdba/protocol/lieutenant.hpp"

namespace qdba::protocol {

enum class StrategyKind { Loyal, RandomTraitor };

/// One lieutenant's conduct across the three classical rounds.
class LieutenantBehavior {
 public:
  virtual ~LieutenantBehavior() = default;
  virtual StrategyKind kind() const = 0;
  bool loyal() const { return kind() == StrategyKind::Loyal; }
  virtual StepResult step(int round, std::span<const RoundMessage> inbox) = 0;
  virtual const LieutenantState& state() const = 0;
};

class LoyalLieutenant final : public LieutenantBehavior {
 public:
  LoyalLieutenant(const IndexScheme& scheme, LieutenantState state, CheckTolerances tol)
      : scheme_(scheme), state_(std::move(state)), tol_(tol) {}

  StrategyKind kind() const override { return StrategyKind::Loyal; }
  StepResult step(int round, std::span<const RoundMessage> inbox) override;
  const LieutenantState& state() const override { return state_; }

 private:
  IndexScheme scheme_;
  LieutenantState state_;
  CheckTolerances tol_;
};

/// Uncoordinated traitor: every round it announces a uniformly random
/// decision in {0, 1, Abort}, attaching the genuine material it holds (its own
/// vector, every peer vector received so far, and its record on Abort).
class RandomTraitor final : public LieutenantBehavior {
 public:
  RandomTraitor(const IndexScheme& scheme, LieutenantState state, des::RngStream rng)
      : scheme_(scheme), state_(std::move(state)), rng_(std::move(rng)) {}

  StrategyKind kind() const override { return StrategyKind::RandomTraitor; }
  StepResult step(int round, std::span<const RoundMessage> inbox) override;
  const LieutenantState& state() const override { return state_; }

 private:
  IndexScheme scheme_;
  LieutenantState state_;
  des::RngStream rng_;
};

std::unique_ptr<LieutenantBehavior> make_lieutenant(StrategyKind kind, const IndexScheme& scheme,
                                                    LieutenantState state,
                                                    const CheckTolerances& tol,
                                                    des::RngStream rng);

struct CommandIssue {
  Bit order = 0;
  CommandVector vector;
};

/// The commander's order and proof for every lieutenant.
///
/// A loyal commander draws one uniform order per shot. A traitorous one draws
/// an independent uniform order per lieutenant and builds each vector honestly
/// for it.
std::vector<CommandIssue> issue_commands(const BitVector& commander_record,
                                         const IndexScheme& scheme, bool loyal,
                                         des::RngStream& rng);

}  // namespace qdba::protocol
