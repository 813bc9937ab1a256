#pragma once

#include <stdexcept>
#include <string>

namespace snb {

// Base class for everything this library throws on bad input or a
// violated contract. Catching snb::Error is enough to turn any failure
// into a report entry.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define SNB_DEFINE_ERROR(Name)    \
  struct Name : Error {           \
    using Error::Error;           \
  }

// Digraph construction / format parsing.
SNB_DEFINE_ERROR(OrientationViolation);
SNB_DEFINE_ERROR(LoopArc);
SNB_DEFINE_ERROR(VertexOutOfRange);
SNB_DEFINE_ERROR(TooManyVertices);
SNB_DEFINE_ERROR(SyntaxError);
SNB_DEFINE_ERROR(BadHeader);
SNB_DEFINE_ERROR(BadPadding);

// Analysis preconditions.
SNB_DEFINE_ERROR(NotATournament);
SNB_DEFINE_ERROR(AlreadyKing);

// Split-graph preconditions.
SNB_DEFINE_ERROR(NotIndependent);
SNB_DEFINE_ERROR(NotTournamentOnY);
SNB_DEFINE_ERROR(NotCompleteSplit);
SNB_DEFINE_ERROR(VertexNotInX);
SNB_DEFINE_ERROR(NotRegularTournamentOnY);
SNB_DEFINE_ERROR(NotAlmostRegular);
SNB_DEFINE_ERROR(NotAlmostRegularOnY);
SNB_DEFINE_ERROR(PreconditionViolated);

// Generators / harness.
SNB_DEFINE_ERROR(InvalidProbability);
SNB_DEFINE_ERROR(EvenOrder);
SNB_DEFINE_ERROR(OddOrder);
SNB_DEFINE_ERROR(TooSmall);
SNB_DEFINE_ERROR(SpaceTooLarge);
SNB_DEFINE_ERROR(UnknownPredicate);

// Thrown when a postcondition backed by a proved theorem fails. Seeing
// one of these means either an implementation bug or a counterexample
// to a published result; the harness archives the offending graph.
SNB_DEFINE_ERROR(TheoremViolation);

#undef SNB_DEFINE_ERROR

}  // namespace snb
