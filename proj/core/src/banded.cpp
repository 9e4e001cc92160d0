#include "bcjq/banded.hpp"

namespace bcjq {

ThirdOrderSpec<BcQuat> bcj_recurrence_spec() {
  return {BcQuat(1), BcQuat(1), BcQuat(2), bcj(0), bcj(1), bcj(2)};
}

BcQuat bcj_via_det(std::uint64_t n, const std::vector<EntryOverride<BcQuat>>& overrides) {
  static const ThirdOrderSpec<BcQuat> kSpec = bcj_recurrence_spec();
  return det_exact(build_matrix(kSpec, n, overrides));
}

}  // namespace bcjq
