#pragma once

#include <stdexcept>
#include <string>

namespace rectpoint {

// A geometric construction degenerated (coincident points, parallel lines,
// tangent circles, ...). Claim drivers catch this and turn it into a
// degeneracy tag; it is not a programming error.
class construction_error : public std::runtime_error {
public:
  explicit construction_error(std::string tag)
      : std::runtime_error(tag), tag_(std::move(tag)) {}

  const std::string& tag() const noexcept { return tag_; }

private:
  std::string tag_;
};

// A symbolic computation outgrew the configured term budget. Verification
// drivers report "inconclusive" on this, never a wrong answer.
class budget_exceeded : public std::runtime_error {
public:
  budget_exceeded(std::size_t terms, std::size_t budget)
      : std::runtime_error("polynomial term budget exceeded: " +
                           std::to_string(terms) + " > " + std::to_string(budget)) {}

  explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rectpoint
