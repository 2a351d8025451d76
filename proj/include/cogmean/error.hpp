#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cogmean {

enum class Errc {
  OrderOutOfRange,
  LoopEdge,
  VertexOutOfRange,
  MalformedHeader,
  TruncatedBits,
  TrailingGarbage,
  EmptySubset,
  SyntaxError,
  ArityError,
  NotACograph,
  LeafOutOfRange,
  ZeroPolynomial,
  ProbabilityOutOfRange,
  RangeError,
  UnknownFamily,
  NoWitnessFound,
  UnknownSuite,
  ParseError,
};

constexpr std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::OrderOutOfRange: return "OrderOutOfRange";
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::MalformedHeader: return "MalformedHeader";
    case Errc::TruncatedBits: return "TruncatedBits";
    case Errc::TrailingGarbage: return "TrailingGarbage";
    case Errc::EmptySubset: return "EmptySubset";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::ArityError: return "ArityError";
    case Errc::NotACograph: return "NotACograph";
    case Errc::LeafOutOfRange: return "LeafOutOfRange";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ProbabilityOutOfRange: return "ProbabilityOutOfRange";
    case Errc::RangeError: return "RangeError";
    case Errc::UnknownFamily: return "UnknownFamily";
    case Errc::NoWitnessFound: return "NoWitnessFound";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library. `code()` identifies the failure class;
/// `position()` is meaningful for parse errors only (byte offset into input).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::size_t position = 0)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        position_(position) {}

  Errc code() const noexcept { return code_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Errc code_;
  std::size_t position_;
};

}  // namespace cogmean
