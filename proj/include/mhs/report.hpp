#pragma once

#include <string>

#include "mhs/congruence.hpp"
#include "mhs/identities.hpp"

namespace mhslab {

enum class OutputFormat { pretty, json, tsv };

// One line per report. JSON objects keep a fixed field order so identical
// inputs give byte-identical output; with_timing=false zeroes elapsed_ms for
// byte-exact diffing.
std::string format_report(const VerificationReport& r, OutputFormat f, bool with_timing = true);
std::string format_report(const CongruenceReport& r, OutputFormat f);

std::string format_summary(const SweepSummary& s, OutputFormat f);

// header line for tsv output
std::string tsv_header_verification();
std::string tsv_header_congruence();

}  // namespace mhslab
