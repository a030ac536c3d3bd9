#pragma once

#include <stdexcept>
#include <string>

namespace o1t {

// Base for all library errors; carries a stable code used by the CLI to
// pick exit statuses.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct InconsistentRotation : Error {
    explicit InconsistentRotation(const std::string& w) : Error("InconsistentRotation", w) {}
};
struct NonSimple : Error {
    explicit NonSimple(const std::string& w) : Error("NonSimple", w) {}
};
struct Degenerate : Error {
    explicit Degenerate(const std::string& w) : Error("Degenerate", w) {}
};
struct Disconnected : Error {
    explicit Disconnected(const std::string& w) : Error("Disconnected", w) {}
};
struct NotQuadrangulation : Error {
    explicit NotQuadrangulation(const std::string& w) : Error("NotQuadrangulation", w) {}
};
struct AdjacentSplitNeighbors : Error {
    explicit AdjacentSplitNeighbors(const std::string& w) : Error("AdjacentSplitNeighbors", w) {}
};
struct ResultNonSimple : Error {
    explicit ResultNonSimple(const std::string& w) : Error("ResultNonSimple", w) {}
};
struct NotFourRegular : Error {
    explicit NotFourRegular(const std::string& w) : Error("NotFourRegular", w) {}
};
struct DiagonalCollision : Error {
    explicit DiagonalCollision(const std::string& w) : Error("DiagonalCollision", w) {}
};
struct NotClosed : Error {
    explicit NotClosed(const std::string& w) : Error("NotClosed", w) {}
};
struct NotSimpleCycle : Error {
    explicit NotSimpleCycle(const std::string& w) : Error("NotSimpleCycle", w) {}
};
struct NoDiskSide : Error {
    explicit NoDiskSide(const std::string& w) : Error("NoDiskSide", w) {}
};
struct AmbiguousDisk : Error {
    explicit AmbiguousDisk(const std::string& w) : Error("AmbiguousDisk", w) {}
};
struct InternalInvariant : Error {
    explicit InternalInvariant(const std::string& w) : Error("InternalInvariant", w) {}
};
struct TheoremViolation : Error {
    explicit TheoremViolation(const std::string& w) : Error("TheoremViolation", w) {}
};
struct TooLarge : Error {
    explicit TooLarge(const std::string& w) : Error("TooLarge", w) {}
};
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& w) : Error("BudgetExceeded", w) {}
};
struct OddOrder : Error {
    explicit OddOrder(const std::string& w) : Error("OddOrder", w) {}
};
struct OrderTooSmall : Error {
    explicit OrderTooSmall(const std::string& w) : Error("OrderTooSmall", w) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error("ParseError", w) {}
};
struct EmptyCorpus : Error {
    explicit EmptyCorpus(const std::string& w) : Error("EmptyCorpus", w) {}
};

} // namespace o1t
