#pragma once

#include <stdexcept>
#include <string>

namespace gctt {

struct Pos {
  int line = 0;
  int col = 0;
  bool known() const { return line > 0; }
  std::string str() const { return std::to_string(line) + ":" + std::to_string(col); }
};

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg, Pos pos = {})
      : std::runtime_error(pos.known() ? pos.str() + ": " + msg : msg), pos_(pos), bare_(msg) {}
  Pos pos() const { return pos_; }
  const std::string& bare() const { return bare_; }

 private:
  Pos pos_;
  std::string bare_;
};

// Syntax and scope errors surface as exit code 2 in the CLI.
class ParseError : public Error {
 public:
  using Error::Error;
};

enum class Tri { No, Unknown, Yes };

inline Tri tri_and(Tri a, Tri b) {
  if (a == Tri::No || b == Tri::No) return Tri::No;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  return Tri::Yes;
}

inline Tri tri_or(Tri a, Tri b) {
  if (a == Tri::Yes || b == Tri::Yes) return Tri::Yes;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  return Tri::No;
}

inline Tri tri_of(bool b) { return b ? Tri::Yes : Tri::No; }

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::No: return "No";
    case Tri::Unknown: return "Unknown";
    case Tri::Yes: return "Yes";
  }
  return "?";
}

}  // namespace gctt
