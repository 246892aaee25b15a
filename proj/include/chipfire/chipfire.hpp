#pragma once

#include "chipfire/arithmetical.hpp"
#include "chipfire/fixtures.hpp"
#include "chipfire/oracle.hpp"
#include "chipfire/sandpile.hpp"
