// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "circuit.hpp"
#include "complexity.hpp"
#include "parallel.hpp"
#include "random.hpp"
#include "runner.hpp"
#include "statevector.hpp"
#include "topology.hpp"
