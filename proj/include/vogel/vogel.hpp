/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vogel-qdim Authors
 */

#pragma once

#include "appendix_tables.hpp"
#include "errors.hpp"
#include "identities.hpp"
#include "instanton.hpp"
#include "power_series.hpp"
#include "rational.hpp"
#include "root_system.hpp"
#include "sinh_product.hpp"
#include "specialization.hpp"
#include "universal.hpp"
#include "vogel_params.hpp"
