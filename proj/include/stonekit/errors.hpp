#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stonekit {

// Domain failures carry a stable machine-readable name ("NotProper",
// "PrimeMismatch", ...) next to the human message.  The CLI prints the name
// on stderr and exits 1; tests match on it.
class domain_error : public std::runtime_error {
public:
    domain_error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

[[noreturn]] inline void raise(std::string name, const std::string& what) {
    throw domain_error(std::move(name), what);
}

// First Boolean-algebra law broken by a raw table bundle, together with the
// elements that break it (up to three, in scan order).
class axiom_violation : public domain_error {
public:
    axiom_violation(std::string axiom, std::vector<std::size_t> witness,
                    const std::string& what)
        : domain_error("AxiomViolation", what),
          axiom_(std::move(axiom)),
          witness_(std::move(witness)) {}

    const std::string& axiom() const noexcept { return axiom_; }
    const std::vector<std::size_t>& witness() const noexcept { return witness_; }

private:
    std::string axiom_;
    std::vector<std::size_t> witness_;
};

} // namespace stonekit
