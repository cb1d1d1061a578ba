#ifndef BKPVC_ERROR_HPP
#define BKPVC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bkpvc {

enum class Errc {
    cycle_detected,
    invalid_vertex,
    duplicate_edge,
    self_loop,
    empty_forest,
    invalid_k,
    too_large,
    domain_violation,
    not_a_cover,
    mismatched_inputs,
    invalid_params,
    parse_error,
};

const char* to_string(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what);

    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

}  // namespace bkpvc

#endif
