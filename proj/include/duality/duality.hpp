#pragma once

#include "duality/counting.hpp"
#include "duality/fourier.hpp"
#include "duality/group_part.hpp"
#include "duality/hopf.hpp"
#include "duality/hopf_map.hpp"
#include "duality/length.hpp"
#include "duality/properties.hpp"
#include "duality/seminorm.hpp"
#include "duality/semicharacter.hpp"
#include "duality/weighted.hpp"
