#pragma once

#include <optional>
#include <string>
#include <vector>

#include "remon/capacity.hpp"
#include "remon/confusion.hpp"
#include "remon/essential.hpp"
#include "remon/instance.hpp"

namespace remon {

enum class CheckKind { epsilon_perfect, perfect, one_shot };

/// Outcome of one reconstruction check. The epsilon-perfect and one-shot
/// checks test sufficient conditions only: holds=false there means "not
/// established". The perfect-monitoring check is an equivalence, so its
/// negative verdict is definitive.
struct ConditionReport {
  CheckKind kind = CheckKind::epsilon_perfect;
  bool holds = false;
  bool definitive = false;
  std::vector<Scalar> per_player_x;
  Scalar x, y;                       // worst player x, mediator y
  std::optional<Scalar> z;           // one-shot only
  Scalar epsilon_bound;              // x+y-xy, or the three-way bound
  std::optional<double> rate_bits;   // essential rate H
  std::optional<CapacityResult> capacity;
  std::optional<PriceReport> price;
  std::vector<XYColoringResult> coloring_checks;  // per player
  std::optional<PaintingResult> painting;
  std::optional<EssentialRecoding> recoding;
  std::vector<std::string> diagnostics;
};

/// Blockwise reconstruction of eps-perfect monitoring: every player passes
/// the (x,y)-coloring condition with x+y-xy <= eps, and the essential rate
/// fits under the broadcast channel's common-message capacity.
ConditionReport check_epsilon_perfect(const MonitoringInstance& inst,
                                      const Scalar& epsilon);

/// Reconstruction of perfect monitoring: the mediator observation paints the
/// players' support graphs and the essential rate (support-mode recoding)
/// fits under the capacity. Both directions hold, so a failure is a
/// definitive negative.
ConditionReport check_perfect(const MonitoringInstance& inst);

/// 1 - (1-x)(1-y)(1-z), kept exact on exact inputs. Arguments must lie in
/// [0,1].
Scalar combined_error(const Scalar& x, const Scalar& y, const Scalar& z);

/// One-shot reconstruction: (x,y)-coloring for every player plus a z-perfect
/// broadcast leg per player, with combined error at most eps.
ConditionReport check_one_shot(const MonitoringInstance& inst,
                               const Scalar& epsilon);

/// Effective essential-symbol encoder: the instance's encoder map when
/// present, otherwise the identity. Throws when not total on R or when an
/// image is not a broadcast input.
std::map<std::string, std::string> resolve_encoder(
    const MonitoringInstance& inst, const EssentialRecoding& rec);

/// Composed channel from essential symbols to one player's broadcast
/// output: rows of the per-player broadcast marginal selected through the
/// encoder.
Channel essential_to_player_channel(const MonitoringInstance& inst,
                                    const EssentialRecoding& rec,
                                    const std::map<std::string, std::string>&
                                        encoder,
                                    size_t player);

}  // namespace remon
