#pragma once

// Continuous-time quantum and classical walks on graphs: exact spectral
// computation, closed-form star/complete-graph transition probabilities,
// and the cross-validation suite tying the two together.

#include "ctwalk/closed_form.hpp"
#include "ctwalk/dynamics.hpp"
#include "ctwalk/edge_list.hpp"
#include "ctwalk/errors.hpp"
#include "ctwalk/gram_schmidt.hpp"
#include "ctwalk/graph.hpp"
#include "ctwalk/matrix.hpp"
#include "ctwalk/numeric.hpp"
#include "ctwalk/spectral.hpp"
#include "ctwalk/verify.hpp"
