#pragma once

#include "catalog.hpp"
#include "datum.hpp"
#include "group_spec.hpp"
#include "integer.hpp"
#include "reproduce.hpp"
#include "rigidity.hpp"
#include "root_system.hpp"
#include "serialize.hpp"
#include "weyl.hpp"
