/* C interface of the libjobgate shared library,
 * version 1.0.0 released 2026-08-26.
 * Generated by the binding generator; do not edit by hand.
 */
#ifndef JOBGATE_H
#define JOBGATE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

int32_t gate_init(void);
int32_t gate_final(void);
int32_t gate_call(int32_t job, int32_t size, int32_t *data, int32_t verbose);

/*
 * service swap
 *   base 0
 *   stage 0: initialize (job 0)
 *   stage 1: compute (job 1)
 *   stage 2: retrieve (job 2)
 *   stage 3: output size (job 3)
 */

/*
 * service version
 *   base 40
 *   stage 0: initialize (job 40)
 *   stage 1: compute (job 41)
 *   stage 2: retrieve (job 42)
 *   stage 3: output size (job 43)
 */

/*
 * service polyroots
 *   base 50
 *   stage 0: initialize (job 50)
 *   stage 1: compute (job 51)
 *   stage 2: retrieve (job 52)
 *   stage 3: output size (job 53)
 */

#ifdef __cplusplus
}
#endif

#endif /* JOBGATE_H */
