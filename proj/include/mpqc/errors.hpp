#pragma once

#include <stdexcept>
#include <string>

namespace mpqc {

/// A computed object failed an internal verification that should hold by
/// construction (a falsified theorem instance, a corrupted invariant).
class consistency_error : public std::logic_error {
   public:
    explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

/// An enumeration or search would exceed its configured cap.
class budget_exceeded : public std::runtime_error {
   public:
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A cited existence result could not be realized by any of the documented
/// construction strategies for the requested parameters.
class construction_gap : public std::runtime_error {
   public:
    explicit construction_gap(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mpqc
