#include <stdio.h>
#include "hfst.h"

int main(void) {
    HfstModule *twisted = NULL;
    HfstTypeD *fig3 = NULL;
    size_t dim = 99;
    bool verdict = false;
    uint64_t delta = 0;

    if (hfst_module_builtin("S_twisted_bounded", &twisted) != HFST_STATUS_OK) return 1;
    if (hfst_typed_from_curve("lll\n", &fig3) != HFST_STATUS_OK) return 2;
    if (hfst_box_tensor_dim(twisted, fig3, &dim) != HFST_STATUS_OK || dim != 0) return 3;
    if (hfst_is_hfst_typed(fig3, 0, &verdict) != HFST_STATUS_OK || !verdict) return 4;
    if (hfst_seifert_classify("base=disk; cones=1/2,1/3", &verdict, &delta) != HFST_STATUS_OK) return 5;
    if (verdict || delta != 6) return 6;
    if (hfst_typed_parse("gen x i0\narrow x i0 x\n", &fig3) != HFST_STATUS_INVALID) return 7;
    printf("%s\n", hfst_last_error());
    hfst_typed_free(fig3);
    hfst_module_free(twisted);
    return 0;
}
