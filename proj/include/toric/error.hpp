#ifndef TORIC_ERROR_HPP
#define TORIC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace toric {

enum class errc {
    empty_matrix,
    negative_entry,
    zero_column,
    shape_mismatch,
    length_mismatch,
    zero_vector,
    not_in_kernel,
    empty_set,
    index_out_of_range,
    not_a_term_order,
    not_a_face,
    empty_fiber,
    parse_error,
    generation_check_failed,
    fiber_cap_exceeded,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

    // Process exit code contract: 0 ok, 2 input error, 3 resource cap.
    int exit_code() const noexcept {
        if (code_ == errc::fiber_cap_exceeded) return 3;
        if (code_ == errc::generation_check_failed) return 1;
        return 2;
    }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw error(code, what);
}

} // namespace toric

#endif
