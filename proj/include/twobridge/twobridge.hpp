#pragma once

#include "laurent.hpp"
#include "rationals.hpp"
#include "presentations.hpp"
#include "butterfly.hpp"
#include "eta_oracle.hpp"
#include "diagrams.hpp"
#include "moth.hpp"
