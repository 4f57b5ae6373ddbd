#pragma once

#include "gjfa/analysis.hpp"
#include "gjfa/constructions.hpp"
#include "gjfa/core.hpp"
#include "gjfa/corpus.hpp"
#include "gjfa/format.hpp"
#include "gjfa/insertion_systems.hpp"
#include "gjfa/langops.hpp"
#include "gjfa/semantics.hpp"
