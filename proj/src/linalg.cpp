#include "qschur/linalg.hpp"
