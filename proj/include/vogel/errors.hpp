/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vogel-qdim Authors
 */

#pragma once

#include <stdexcept>
#include <string>

namespace vogel {

struct error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

/// Divisor series has higher valuation than the dividend.
struct division_by_zero_series : error {
	using error::error;
};

/// sinh(den x / 4) with den = 0 in a single sinh ratio.
struct zero_denominator_form : error {
	using error::error;
};

/// A denominator linear form in (alpha, beta, gamma) vanishes at the requested point.
struct pole_at_parameters : error {
	pole_at_parameters(const std::string& form, const std::string& where)
	: error("pole at parameters " + where + ": denominator form " + form + " vanishes"),
	  form_(form)
	{}
	explicit pole_at_parameters(const std::string& msg) : error(msg) {}
	const std::string& form() const noexcept { return form_; }

private:
	std::string form_;
};

/// Evaluation at a numeric x failed (non-finite x or result, or the series route diverges).
struct pole_at_x : error {
	using error::error;
};

struct invalid_rank : error {
	using error::error;
};

struct empty_orthogonal_subsystem : error {
	using error::error;
};

struct length_mismatch : error {
	using error::error;
};

struct not_dominant : error {
	using error::error;
};

struct unknown_algebra : error {
	using error::error;
};

} // namespace vogel
