"""Embedded graph6 data for the three large named graphs.

Generated by scripts/gen_named_graph_data.py; validated against their
strongly-regular parameters both there and again at load time.
"""

GEWIRTZ_G6 = "w?????????????????????BK?r??]?@`_E@_AOc?KC_@GK?@T??Ai???l???Sg??S?S?M_A_?t?A_EA_D?E@_W?K?cH?B?C_o@_?KC_E??Ko?o??r??o??WW@_??@w?W???G`D@GQOPGcGQD?g_cIGHAAIAQGO_cH@OPO_OcGcGcCCB?d?b?_B?oKCSC?_a_Pa@C?IGGaaAG?PAH@CGo?AHCOGcS??GSaGQCO??Q`GQC`??AOOhCGc??CGHGaPC???"

M22_G6 = "~?@L????????????????????????????????????@eW?rB??{o?EF_?oKg?cHS?EAY?@GLO?AiB??IgE??DgH??DIC_??ZI???Be_???qT???@bS???I?Io?Yi?IW?Ma_@X?KSI?TG@d?oKA_WKAOcD?ocAOWIB?W?oQD@_Q?EAk?Ko??oiOAX??K@X?HW??WDK?LG??EW?X_@_@ko?KoB?BBB?Ko?K?oF_@e?E?@_q_WKA_B?AY?oWI?H?ATB?cD?H??t@_QD?B??Ip_Ai?K??AhK?U_AO??Df?Ai?E???Su?DI?Q???cOaaAOaOgPPCaPACaCcCSSOPGSP@C`OgGgGc_gQA_aQC`A_gICQCDAOaHAGcOQOE@_QI@CW_P_AKB@B@OSASA?oPOGb@OKB@?Cg_`GgaAGa_?W`CQAH@DGa??gcOcAKCSOa??cIPCO`O_gc??PICaC_S_c`??DGGWQGPCaAC??o_dAGcPAOH???"

HIGMAN_SIMS_G6 = "~?@csaCCA?_C?O?_?_?O?C??_?A??C??C??A???_??C???N_?@W`@GWQACKCIOB?dA?SaCO@PCa?A`CG_A_aP?@I@_O?QOcG?APGQ??HB?o??P_a_??POPO??GdCC??AGg__??O{?A??@?N?G??A?@wO??A??Fo???rB???KrKN???Kop_@`_?]WE?@w?EF_IcE?@_XOIWH?AOdOD@GK?oRO@OKC_QBS?Hg?S@T@_?dOA_IgE?@GSg?JOQ?@GJO?SgQ??aGaGBXO??GPCQ?xg??@@CPOXI_??CAGb@bS???Eg?gS?T_?tES?Sg?h_?yB@T?S?JG@a_oIgA_DQ?XODcH?WE@OKE?T_WAOcD?oc?gQCc_oSE?o?gKBB@GSE@G?QCGWoT_@e??CQ@IKIc?eO??`BAU?k_Ck??AAQPWDK?LG??Br??Ko?r?B?BBKo?r??r?K?K@_EWWW@e?@_E?W?X`w?X_@_?WA_`QXOKE@O@_?H@IIY?oWI?H??PO_siE@GI?Q??Oh@RSE@GS?K??E@OhUK?TO@_??@OgEiR?Dg?c???HGKQr_@T?B????b@HSu?DI?Q????oIXG`DCC`C`Oa?oDdCQHCGQGQOP?TH_aaAHAaGGcI?DL_IAIAHGIC_gG?e_LHAO`OSDAHA?ATBDAOaHAGcOQO?BSEKB?cSAGp?b??BI@goKCKD@OHOG?@XoEAI@CWI@_WG??Tb@IGGQIG_aGg??@`SkOaH@C_acP???EAkgcOcAKCSOa???BHTGSaG`A`@PG???BEhCgQGQ@QAQC????[sh@BAPAGcOO_???EqkGHOaHCOcAO??"
