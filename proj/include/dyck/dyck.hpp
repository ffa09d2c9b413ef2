#pragma once

#include "asymptotics.hpp"
#include "bigint.hpp"
#include "error.hpp"
#include "families.hpp"
#include "generate.hpp"
#include "pattern.hpp"
#include "poset.hpp"
#include "sequences.hpp"
#include "word.hpp"
