#pragma once

#include <stdexcept>
#include <string>

namespace asianq {

// Base for every failure raised by the numerical core.
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class domain_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

class pole_error : public domain_error {
public:
    using domain_error::domain_error;
};

class convergence_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

class precision_loss_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

class overflow_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

} // namespace asianq
