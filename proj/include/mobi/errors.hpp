#pragma once

#include <stdexcept>
#include <string>

namespace mobi {

/// An input fell outside the carrier of an algebra or space.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// The boundary system of a pair construction became (near-)singular for
/// distinct Y-coordinates; signals the nondegeneracy contract was violated.
struct singular_system_error : std::runtime_error {
    explicit singular_system_error(const std::string& what) : std::runtime_error(what) {}
};

/// A module law failed while bridging a space to a module, which means the
/// space handed in was not affine.
struct affineness_error : std::runtime_error {
    explicit affineness_error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad instance name or parameter blob.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mobi
