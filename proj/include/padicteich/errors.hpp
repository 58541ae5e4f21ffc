#pragma once

#include <stdexcept>
#include <string>

namespace padicteich {

// Base class for everything this library throws on bad input or exhausted
// precision. Logic bugs (broken closure certificates, non-bijective
// reductions) throw internal_error instead: they indicate a defect, not a
// recoverable condition.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};

struct zero_input : error {
    zero_input() : error("operation undefined for zero input") {}
};

struct precision_exhausted : error {
    explicit precision_exhausted(const std::string& what = "relative precision dropped below one digit")
        : error(what) {}
};

struct domain_error : error {
    explicit domain_error(const std::string& what) : error(what) {}
};

struct non_convergence : error {
    explicit non_convergence(const std::string& what) : error(what) {}
};

struct not_a_member : error {
    explicit not_a_member(const std::string& what, int coefficient_index = -1)
        : error(what), index(coefficient_index) {}
    int index;
};

struct not_in_image : error {
    explicit not_in_image(const std::string& what) : error(what) {}
};

struct not_bijective : internal_error {
    explicit not_bijective(const std::string& what) : internal_error(what) {}
};

struct modulus_mismatch : error {
    explicit modulus_mismatch(const std::string& what) : error(what) {}
};

struct length_mismatch : error {
    explicit length_mismatch(const std::string& what) : error(what) {}
};

struct wild_ramification_unsupported : error {
    explicit wild_ramification_unsupported(const std::string& what) : error(what) {}
};

struct depth_insufficient : error {
    explicit depth_insufficient(const std::string& what) : error(what) {}
};

struct vanishing_form : error {
    explicit vanishing_form(const std::string& what) : error(what) {}
};

struct vanishing_density : error {
    explicit vanishing_density(const std::string& what) : error(what) {}
};

struct bad_reduction : error {
    explicit bad_reduction(const std::string& what) : error(what) {}
};

struct out_of_range : error {
    explicit out_of_range(const std::string& what) : error(what) {}
};

struct missing_root : error {
    explicit missing_root(const std::string& what) : error(what) {}
};

struct pole_at_torsion_point : error {
    explicit pole_at_torsion_point(const std::string& what) : error(what) {}
};

struct branch_unavailable : error {
    explicit branch_unavailable(const std::string& what) : error(what) {}
};

struct not_torsion : error {
    explicit not_torsion(const std::string& what) : error(what) {}
};

struct product_mismatch : error {
    explicit product_mismatch(const std::string& what) : error(what) {}
};

struct zero_scale : error {
    zero_scale() : error("affine scale must be nonzero") {}
};

}  // namespace padicteich
