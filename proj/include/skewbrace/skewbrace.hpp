#pragma once

#include "skewbrace/brace.hpp"
#include "skewbrace/constructions.hpp"
#include "skewbrace/enumeration.hpp"
#include "skewbrace/errors.hpp"
#include "skewbrace/group.hpp"
#include "skewbrace/io.hpp"
#include "skewbrace/samples.hpp"
#include "skewbrace/ybe.hpp"
