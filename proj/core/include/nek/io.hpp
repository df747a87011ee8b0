#pragma once

#include <iosfwd>
#include <string>

#include "nek/events.hpp"
#include "nek/oracle.hpp"
#include "nek/states.hpp"
#include "nek/structure.hpp"

namespace nek {

// Malformed input file. what() carries "file:line: message" when a line is
// attributable.
class ParseError : public ValidationError {
  public:
    ParseError(const std::string& file, int line, const std::string& msg)
        : ValidationError(line > 0 ? file + ":" + std::to_string(line) + ": " + msg
                                   : file + ": " + msg) {}
};

enum class FileKind { Gse, Poset };

// Reads the first significant line ("gse" or "poset") to pick the parser.
FileKind sniff_kind(const std::string& path);

// Line format:
//   gse
//   states s1 s2 ...
//   event <label> = <value> <value> ...
// Values are integers or integer/integer fractions in [0,1]; '#' starts a
// comment. The constants are implicit members and must not be declared.
EventSet parse_gse(std::istream& in, const std::string& filename, bool autoclose);
EventSet parse_gse_file(const std::string& path, bool autoclose);

// Line format:
//   poset
//   elements 0 a b 1
//   leq <a> <b>          (generators; the closure is taken)
//   prime <a> <b>        (symmetric; every element needs a partner)
// "0" and "1" must name the bounds.
InvolutivePoset parse_poset(std::istream& in, const std::string& filename);
InvolutivePoset parse_poset_file(const std::string& path);

// Inverse of the parsers, canonical: events sorted by label, poset order
// given by covering pairs only. parse(write(x)) == x for sets built in
// canonical member order, and the text itself is bit-stable.
std::string write_gse(const EventSet& g);
std::string write_poset(const InvolutivePoset& p);

enum class ReportFormat { Human, Machine };

// Classification rendering. Machine format is sorted key=value lines, one
// per flag, witness and cross-check; human format is a short narrative.
std::string render_classification(const ClassificationReport& r, const EventSet& g,
                                  ReportFormat fmt);

// Shared rendering for state-set results (synthesis or canonical states).
std::string render_synthesis(const SynthesisResult& res, const InvolutivePoset& p,
                             ReportFormat fmt);
std::string render_state_set(const StateSet& s, const InvolutivePoset& p, ReportFormat fmt);

std::string render_verification(const VerificationReport& rep, ReportFormat fmt);

}  // namespace nek
