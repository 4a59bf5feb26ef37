#pragma once

#include "treewalk/error.hpp"
#include "treewalk/exact.hpp"
#include "treewalk/tree.hpp"
#include "treewalk/prufer.hpp"
#include "treewalk/canonical.hpp"
#include "treewalk/enumerate.hpp"
#include "treewalk/walk.hpp"
#include "treewalk/oracle.hpp"
#include "treewalk/families.hpp"
#include "treewalk/transforms.hpp"
#include "treewalk/audit.hpp"
