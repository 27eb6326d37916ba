#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace radloc {

// Base for recoverable domain errors. name() is the stable identifier that
// the CLI prints on exit code 2 and that sweep records store in their
// failure field.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

struct ConcentricCircles : Error {
  explicit ConcentricCircles(const std::string& what) : Error("ConcentricCircles", what) {}
};

struct CollinearAnchors : Error {
  explicit CollinearAnchors(const std::string& what) : Error("CollinearAnchors", what) {}
};

struct DegenerateCost : Error {
  explicit DegenerateCost(const std::string& what) : Error("DegenerateCost", what) {}
};

struct NonFinite : Error {
  explicit NonFinite(const std::string& what) : Error("NonFinite", what) {}
};

struct NonPositiveDistance : Error {
  explicit NonPositiveDistance(const std::string& what) : Error("NonPositiveDistance", what) {}
};

struct NonPositiveSignal : Error {
  explicit NonPositiveSignal(const std::string& what) : Error("NonPositiveSignal", what) {}
};

struct SourceOnAnchor : Error {
  explicit SourceOnAnchor(const std::string& what) : Error("SourceOnAnchor", what) {}
};

struct IoError : Error {
  explicit IoError(const std::string& what) : Error("IoError", what) {}
};

}  // namespace radloc
