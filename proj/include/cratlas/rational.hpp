#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace cratlas {

using Json = nlohmann::ordered_json;

// Exact arithmetic everywhere; the core never touches floating point.
using Rat = boost::rational<long long>;

enum class Errc {
    ok = 0,
    invalid_rank,
    mismatched_system,
    invalid_painting,
    zero_entry,
    non_primitive,
    non_regular,
    unparseable_isotropy,
    invalid_modulus,
    unsupported_rank,
    invalid_span,
    degenerate_form,
    unsupported_instance,
    bad_argument,
    parse_error,
    io_error,
    internal
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

const char* errc_name(Errc c);

inline Json rat_to_json(const Rat& r) {
    return Json{{"num", r.numerator()}, {"den", r.denominator()}};
}

Rat rat_from_json(const Json& j);

// Accepts "3", "-3", "1/2", "-1/2".
Rat parse_rat(const std::string& s);

std::string rat_to_string(const Rat& r);

} // namespace cratlas
