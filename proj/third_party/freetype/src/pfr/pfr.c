/****************************************************************************
 *
 * pfr.c
 *
 *   FreeType PFR driver component.
 *
 * Copyright (C) 2002-2023 by
 * David Turner, Robert Wilhelm, and Werner Lemberg.
 *
 * This file is part of the FreeType project, and may only be used,
 * modified, and distributed under the terms of the FreeType project
 * license, LICENSE.TXT.  By continuing to use, modify, or distribute
 * this file you indicate that you have read the license and
 * understand and accept it fully.
 *
 */


#define FT_MAKE_OPTION_SINGLE_OBJECT

#include "pfrcmap.c"
#include "pfrdrivr.c"
#include "pfrgload.c"
#include "pfrload.c"
#include "pfrobjs.c"
#include "pfrsbit.c"


/* END */
