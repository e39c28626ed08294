#pragma once

#include "liealg/catalog.hpp"
#include "liealg/classify.hpp"
#include "liealg/document.hpp"
#include "liealg/invariants.hpp"
#include "liealg/report.hpp"
#include "liealg/structure.hpp"
#include "liealg/verify.hpp"
