// Copyright 2026 The sepscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sepscope/criteria.hpp"
#include "sepscope/density.hpp"
#include "sepscope/states.hpp"
#include "sepscope/truncation.hpp"

namespace sepscope {

// Matrix files
//
//   # comment lines start with '#'
//   dA dB
//   <dA*dB lines of dA*dB whitespace-separated entries, each "re+imj">
//
// Entries may also be a bare real ("0.5") or bare imaginary ("0.5j").
// Emission uses 17 significant digits so parse(emit(M)) == M bit for bit.

struct MatrixFile {
    ComplexMatrix matrix;
    BipartiteDims dims;
};

/// Throws ParseError with "line L, column C" in the message.
MatrixFile parse_matrix_file(std::string_view text);
std::string emit_matrix_file(const ComplexMatrix& m, BipartiteDims dims);

/// Parses and validates; invariant failures surface as ValidationError.
DensityMatrix parse_density_matrix(std::string_view text);

std::string format_complex(Complex z);
/// Throws ParseError (without location) on malformed tokens.
Complex parse_complex(std::string_view token);

// State spec files: flat key=value lines, e.g.
//   family=rho_alpha
//   alpha=3.5
//   dim=8
//   r=0.5

StateSpec parse_state_spec(std::string_view text);
std::string emit_state_spec(const StateSpec& spec);

// Report CSV. Header is fixed:
//   family,params,dim,realign_trace_norm,ccn,ppt_min_eig,symmetric,rccn_verdict,ppt_verdict
// Floats carry 12 significant digits; params are "key=value" joined by ';'.

inline constexpr std::string_view kReportCsvHeader =
    "family,params,dim,realign_trace_norm,ccn,ppt_min_eig,symmetric,rccn_verdict,ppt_verdict";

struct ReportRow {
    std::string family;
    std::string params;
    std::size_t dim = 0;
    std::optional<CriterionReport> report;  ///< empty rows print nan scalars and verdict "error"
};

std::string format_number(double value, int significant_digits = 12);
std::string format_params(const std::map<std::string, double>& params);
std::string csv_escape(std::string_view field);

std::string emit_report_csv(const std::vector<ReportRow>& rows);
std::vector<ReportRow> report_rows(const SweepResult& result);

}  // namespace sepscope
