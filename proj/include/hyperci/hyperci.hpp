// Copyright 2026 the hyperci authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "hyperci/cli.hpp"
#include "hyperci/common.hpp"
#include "hyperci/decision.hpp"
#include "hyperci/form.hpp"
#include "hyperci/form_io.hpp"
#include "hyperci/hilbert_vector.hpp"
#include "hyperci/joins.hpp"
#include "hyperci/monomial.hpp"
#include "hyperci/prime_field.hpp"
#include "hyperci/series.hpp"
#include "hyperci/slice_rank.hpp"
