#pragma once

#include "unicyclic/canonical.hpp"
#include "unicyclic/class_filter.hpp"
#include "unicyclic/enumerate.hpp"
#include "unicyclic/error.hpp"
#include "unicyclic/families.hpp"
#include "unicyclic/formulas.hpp"
#include "unicyclic/graph.hpp"
#include "unicyclic/graph6.hpp"
#include "unicyclic/invariants.hpp"
#include "unicyclic/rational.hpp"
#include "unicyclic/serialize.hpp"
#include "unicyclic/verify.hpp"
