#pragma once

#include "sridge/core.hpp"
#include "sridge/harmonic.hpp"
#include "sridge/radon.hpp"
#include "sridge/ridgelet.hpp"
#include "sridge/sht.hpp"
#include "sridge/special.hpp"
#include "sridge/wavelet.hpp"
#include "sridge/wigner.hpp"
