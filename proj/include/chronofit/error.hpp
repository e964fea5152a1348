#pragma once

#include <stdexcept>
#include <string>

namespace chronofit {

// Every failure the library can signal. Values group by theme:
// data validation, transform preconditions, statistics guards, model
// fitting, and file/artifact handling.
enum class errc {
  // series construction / calendar
  UnsortedDates,
  DuplicateDate,
  NonFiniteValue,
  LengthMismatch,
  DegenerateSplit,
  MissingDates,
  EmptySeries,
  SeriesTooShort,

  // preprocess
  ZeroVariance,
  TooFewSupportPoints,
  NonPositiveValue,
  DivisionByZeroValue,
  AnchorMismatch,

  // stats
  BothZeroPair,
  LagTooLarge,
  SingularDesign,
  NonPositiveSample,

  // period pipeline
  TooFewDistinctValues,
  TooFewPoints,
  UnsortedAbscissae,
  OutOfDomain,
  NoExtremaFound,

  // models / search / ensemble
  NonPositiveForMultiplicative,
  OptimizerFailure,
  SampleTooSmallForAicc,
  AllCandidatesFailed,
  InvalidWeights,
  RankDeficientDesign,

  // cli / io
  FileNotFound,
  ParseError,
  HorizonMismatch,
  MissingArtifact,

  // generic misuse of an API (bad enum value, nonpositive horizon, ...)
  InvalidArgument,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

// Process exit code for a failure: 2 = input/validation problem,
// 3 = modeling failure, 4 = anything else.
int exit_code_for(errc code);

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::UnsortedDates: return "UnsortedDates";
    case errc::DuplicateDate: return "DuplicateDate";
    case errc::NonFiniteValue: return "NonFiniteValue";
    case errc::LengthMismatch: return "LengthMismatch";
    case errc::DegenerateSplit: return "DegenerateSplit";
    case errc::MissingDates: return "MissingDates";
    case errc::EmptySeries: return "EmptySeries";
    case errc::SeriesTooShort: return "SeriesTooShort";
    case errc::ZeroVariance: return "ZeroVariance";
    case errc::TooFewSupportPoints: return "TooFewSupportPoints";
    case errc::NonPositiveValue: return "NonPositiveValue";
    case errc::DivisionByZeroValue: return "DivisionByZeroValue";
    case errc::AnchorMismatch: return "AnchorMismatch";
    case errc::BothZeroPair: return "BothZeroPair";
    case errc::LagTooLarge: return "LagTooLarge";
    case errc::SingularDesign: return "SingularDesign";
    case errc::NonPositiveSample: return "NonPositiveSample";
    case errc::TooFewDistinctValues: return "TooFewDistinctValues";
    case errc::TooFewPoints: return "TooFewPoints";
    case errc::UnsortedAbscissae: return "UnsortedAbscissae";
    case errc::OutOfDomain: return "OutOfDomain";
    case errc::NoExtremaFound: return "NoExtremaFound";
    case errc::NonPositiveForMultiplicative: return "NonPositiveForMultiplicative";
    case errc::OptimizerFailure: return "OptimizerFailure";
    case errc::SampleTooSmallForAicc: return "SampleTooSmallForAicc";
    case errc::AllCandidatesFailed: return "AllCandidatesFailed";
    case errc::InvalidWeights: return "InvalidWeights";
    case errc::RankDeficientDesign: return "RankDeficientDesign";
    case errc::FileNotFound: return "FileNotFound";
    case errc::ParseError: return "ParseError";
    case errc::HorizonMismatch: return "HorizonMismatch";
    case errc::MissingArtifact: return "MissingArtifact";
    case errc::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

inline int exit_code_for(errc code) {
  switch (code) {
    case errc::UnsortedDates:
    case errc::DuplicateDate:
    case errc::NonFiniteValue:
    case errc::LengthMismatch:
    case errc::DegenerateSplit:
    case errc::MissingDates:
    case errc::EmptySeries:
    case errc::SeriesTooShort:
    case errc::ZeroVariance:
    case errc::TooFewSupportPoints:
    case errc::NonPositiveValue:
    case errc::DivisionByZeroValue:
    case errc::BothZeroPair:
    case errc::LagTooLarge:
    case errc::NonPositiveSample:
    case errc::TooFewDistinctValues:
    case errc::TooFewPoints:
    case errc::UnsortedAbscissae:
    case errc::OutOfDomain:
    case errc::InvalidWeights:
    case errc::FileNotFound:
    case errc::ParseError:
    case errc::HorizonMismatch:
    case errc::MissingArtifact:
    case errc::InvalidArgument:
      return 2;
    case errc::AnchorMismatch:
    case errc::SingularDesign:
    case errc::NoExtremaFound:
    case errc::NonPositiveForMultiplicative:
    case errc::OptimizerFailure:
    case errc::SampleTooSmallForAicc:
    case errc::AllCandidatesFailed:
    case errc::RankDeficientDesign:
      return 3;
  }
  return 4;
}

}  // namespace chronofit
