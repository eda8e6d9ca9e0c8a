#ifndef SCENIC_ERRORS_HPP
#define SCENIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace scenic {

enum class Errc {
  coincident_pair,
  empty_input,
  degenerate_box,
  degenerate_input,
  k_too_large,
  unreachable,
  no_candidate,
  empty_graph,
  parse_error,
  validation_error,
  io_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::coincident_pair: return "CoincidentPair";
    case Errc::empty_input: return "EmptyInput";
    case Errc::degenerate_box: return "DegenerateBox";
    case Errc::degenerate_input: return "DegenerateInput";
    case Errc::k_too_large: return "KTooLarge";
    case Errc::unreachable: return "Unreachable";
    case Errc::no_candidate: return "NoCandidate";
    case Errc::empty_graph: return "EmptyGraph";
    case Errc::parse_error: return "ParseError";
    case Errc::validation_error: return "ValidationError";
    case Errc::io_error: return "IoError";
  }
  return "Error";
}

}  // namespace scenic

#endif  // SCENIC_ERRORS_HPP
