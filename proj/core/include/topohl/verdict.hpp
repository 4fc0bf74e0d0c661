#ifndef TOPOHL_VERDICT_HPP_
#define TOPOHL_VERDICT_HPP_

#include <string>
#include <utility>

namespace topohl {

// Result of a structural check: success, or the first violated condition.
struct Verdict {
  bool ok = true;
  std::string reason;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }

  explicit operator bool() const noexcept { return ok; }
};

}  // namespace topohl

#endif  // TOPOHL_VERDICT_HPP_
