#include "closure/kpp2d_ic.hpp"

namespace closure {

// Fixed 50x50 sample of a scaled, exponentiated stationary Gaussian process
// (squared-exponential kernel, length scale 0.2, unit variance), row-major
// with axis 0 as the outer index. Stored as data so 2D runs are reproducible
// without a GP sampler at run time.
const int kKpp2dFixtureSide = 50;
const double kKpp2dFixture[2500] = {
    0.165106539406, 0.163794595453, 0.162816095409, 0.162262627646, 0.162065809413, 0.161928871954,
    0.161668335506, 0.160870686809, 0.159055245645, 0.155766068163, 0.150672748691, 0.143612828601,
    0.13462420624, 0.124182989317, 0.112799229705, 0.101133587946, 0.0898774249822, 0.0794907790053,
    0.0703541321927, 0.0626583595579, 0.0564254131865, 0.0516440617566, 0.0482022844396, 0.0460383619502,
    0.0450574148098, 0.0452640503015, 0.0466719146639, 0.0493603078182, 0.0534746992416, 0.0592390689025,
    0.0669511215999, 0.076915272114, 0.0895243342958, 0.105044903984, 0.123639446469, 0.145231703464,
    0.169239328381, 0.1946696221, 0.219856222957, 0.242825843805, 0.261685828862, 0.274609004952,
    0.280820027726, 0.28041681172, 0.274170479166, 0.263849680672, 0.251363760516, 0.238483804794,
    0.226916776564, 0.21773239518, 0.170777637978, 0.170893530035, 0.171315753849, 0.172002237968,
    0.172858400123, 0.173656265333, 0.174044083804, 0.173617684477, 0.171908786584, 0.16836099559,
    0.162787904182, 0.154914790845, 0.144992532979, 0.133468566197, 0.120980002094, 0.108302635799,
    0.0961348029386, 0.0850199100038, 0.0753112955249, 0.0672567068324, 0.0608240222074, 0.0560165450698,
    0.0527235128154, 0.050880225829, 0.0504081038512, 0.0513272310236, 0.0537151153182, 0.0576716461187,
    0.0634275339214, 0.0712924931075, 0.0815994457563, 0.0947711742931, 0.111194609771, 0.131199700349,
    0.154858989473, 0.181902848441, 0.21149369417, 0.242183876774, 0.271925506894, 0.298333684496,
    0.319229497902, 0.332668789606, 0.33798561733, 0.335387093885, 0.326199352893, 0.312419088611,
    0.296203285868, 0.279818179188, 0.264850456189, 0.252824731927, 0.175646606775, 0.177494497585,
    0.179601555886, 0.181805362261, 0.184016390911, 0.185812843741, 0.186923130728, 0.186837493997,
    0.185085086723, 0.181165196802, 0.17486974703, 0.166081157043, 0.155138802301, 0.142531803102,
    0.129014267259, 0.115449547331, 0.102487099974, 0.0907746911707, 0.0806552838516, 0.0723427532005,
    0.0658544408494, 0.0611351633552, 0.0581392742841, 0.0567511748737, 0.0569644225823, 0.0588346732783,
    0.0624854917459, 0.0681381431803, 0.0760382878524, 0.0866225808237, 0.100340990264, 0.117700508818,
    0.139139062987, 0.164991578706, 0.195157675935, 0.229166481893, 0.265889966892, 0.303231203896,
    0.338701456567, 0.369562299622, 0.392931201796, 0.407195049636, 0.411485622404, 0.406438716708,
    0.393838510654, 0.375960699977, 0.355312113164, 0.334440389161, 0.315274641064, 0.299379637355,
    0.179172387126, 0.18306860345, 0.18718367395, 0.191215570721, 0.194893992784, 0.197892512777,
    0.199795111933, 0.200054792745, 0.198123014403, 0.193689798006, 0.186529227585, 0.176702950934,
    0.164620363539, 0.150921814094, 0.136464808517, 0.122068681868, 0.10855896141, 0.0964260362827,
    0.0860977247563, 0.0776849215298, 0.0712736379986, 0.066830578939, 0.0642471887981, 0.0635008600109,
    0.0646328256636, 0.067720166132, 0.0729737412162, 0.0806971747938, 0.091312164605, 0.105345582628,
    0.123332342328, 0.145942774415, 0.173624109756, 0.206713208451, 0.245014336776, 0.28751286404,
    0.332807162469, 0.378160811205, 0.420422559459, 0.456294425841, 0.482955610743, 0.498398752918,
    0.501708901708, 0.49406145907, 0.477579523354, 0.454968474075, 0.429106230378, 0.402986482895,
    0.378567207962, 0.3577630527, 0.180902778711, 0.187021930731, 0.193361566275, 0.199462440058,
    0.204988371239, 0.209375488361, 0.212102372355, 0.212587817072, 0.210471577993, 0.20532771636,
    0.197152769517, 0.186166314043, 0.17295629606, 0.158263270251, 0.142967083022, 0.127966822299,
    0.114033405344, 0.10172616299, 0.0913197104313, 0.0830216806071, 0.0768826689052, 0.0728272213621,
    0.0708209210682, 0.070907897094, 0.0731363565457, 0.0776826638519, 0.0848585147452, 0.0950407681473,
    0.108869741313, 0.126997250741, 0.150033869047, 0.178862200064, 0.213876762185, 0.255463618598,
    0.303060766109, 0.355387834942, 0.410326237587, 0.464707847929, 0.514613270949, 0.556258366618,
    0.586458219124, 0.603210976197, 0.605858509969, 0.595789354513, 0.575326686288, 0.547704638443,
    0.516198377691, 0.483940445291, 0.453392954905, 0.426406528237, 0.180441297936, 0.18885587825,
    0.197524707261, 0.20595918442, 0.213515992439, 0.219484770047, 0.223160621964, 0.224002764168,
    0.221571973664, 0.215676922876, 0.206416117357, 0.194236433431, 0.17990174632, 0.16425337885,
    0.148289545852, 0.132847454485, 0.118700464846, 0.106352294381, 0.0961220484128, 0.0881128815697,
    0.0823709161702, 0.0788641526351, 0.0775992565005, 0.0786392962065, 0.0821070773145, 0.088284028729,
    0.0975986059402, 0.110570224878, 0.127922829768, 0.150452605112, 0.179138683481, 0.214709351179,
    0.257709160442, 0.308332608595, 0.365867587851, 0.428577797557, 0.493736112411, 0.557336240711,
    0.615111439719, 0.662830032373, 0.696946373177, 0.715099955565, 0.717493316307, 0.705342634982,
    0.681075277161, 0.648555353162, 0.611369474819, 0.572691595554, 0.535221936572, 0.501259152453,
    0.177551948343, 0.188180108784, 0.199250775654, 0.210065132465, 0.219790365188, 0.227430611671,
    0.232198830333, 0.233420121219, 0.230747913677, 0.224191653599, 0.213838354381, 0.200575435757,
    0.185188445146, 0.168782354272, 0.152288520263, 0.136617752025, 0.122477888284, 0.110311203156,
    0.100378460363, 0.0927862649436, 0.0875534850524, 0.0846888327332, 0.0842313930334, 0.0862754491912,
    0.0910563739309, 0.0989269723089, 0.110388709285, 0.126187397091, 0.147093143517, 0.17408801579,
    0.208231899406, 0.250472538399, 0.301347285425, 0.360746332191, 0.427794658938, 0.500339997966,
    0.57499501647, 0.64730474579, 0.712491848129, 0.765653679758, 0.803339668063, 0.823339454457,
    0.825727864729, 0.811906854492, 0.784911279478, 0.748232645155, 0.705686296306, 0.660918777962,
    0.616580900443, 0.574824045162, 0.172199308951, 0.184765621528, 0.198078740805, 0.21120027466,
    0.223089056403, 0.232479780118, 0.238487191558, 0.24033147599, 0.237639438438, 0.230446099683,
    0.219282399797, 0.205069012953, 0.188927840668, 0.17186251065, 0.155100209528, 0.139408849181,
    0.125431679299, 0.113571541891, 0.104022290826, 0.0969166844866, 0.0922656560769, 0.0900675205888,
    0.0904129930047, 0.0934672210184, 0.0994833565103, 0.108887773722, 0.122356946023, 0.140619500327,
    0.164684034277, 0.195655401682, 0.234622451879, 0.282536083486, 0.340077783536, 0.406828223195,
    0.481798823399, 0.562366472685, 0.644783680538, 0.723907193428, 0.794630200696, 0.852262277321,
    0.892921101322, 0.914617545096, 0.91711525955, 0.902532206517, 0.873481820682, 0.83370311373,
    0.786909551567, 0.736724364533, 0.68611957331, 0.63743084395, 0.164408536343, 0.1784977645,
    0.193698655739, 0.208904852975, 0.22291121447, 0.234150925723, 0.24154525604, 0.244117563543,
    0.241662203052, 0.234167679742, 0.222525009426, 0.207718563044, 0.191050211172, 0.173724902978,
    0.156904634579, 0.141363199219, 0.127690658852, 0.11623962507, 0.107173286959, 0.100587472646,
    0.0964929216035, 0.0949253198706, 0.0959797295311, 0.0998389626005, 0.106870598916, 0.117540871238,
    0.132497853795, 0.152692762238, 0.179117066306, 0.212926524568, 0.255308013418, 0.307317167217,
    0.369268099744, 0.440956545764, 0.521017949387, 0.606524878695, 0.6935028622, 0.776662611784,
    0.85077249503, 0.910815327215, 0.952826457845, 0.975407543015, 0.978281093857, 0.963334102979,
    0.933279531813, 0.891532774084, 0.84221879723, 0.788201562602, 0.732773758154, 0.678221212837,
    0.15456172269, 0.169685783032, 0.186283045988, 0.203210718402, 0.219000482029, 0.232011019931,
    0.240844804372, 0.244546455359, 0.24252476799, 0.235200777045, 0.223466243889, 0.208574729005,
    0.191814976144, 0.174616480101, 0.157955611309, 0.142774817478, 0.12949594807, 0.118520387699,
    0.109971701502, 0.103860979977, 0.100278941224, 0.0992192356217, 0.10080036369, 0.105270460657,
    0.11296914831, 0.124394616662, 0.140266282624, 0.161488024053, 0.189145123434, 0.224317415067,
    0.268245795644, 0.321884635622, 0.385663065045, 0.459043911344, 0.540674131668, 0.627444493421,
    0.715302591287, 0.798883563284, 0.873216668612, 0.932970047923, 0.974939350252, 0.997113734592,
    1, 0.984705194708, 0.954238212007, 0.912167927125, 0.861364304874, 0.805551984183,
    0.747167332956, 0.688955775065, 0.143196767482, 0.158722971425, 0.176181688373, 0.194248226413,
    0.211463708259, 0.225991600711, 0.236275175763, 0.241122711219, 0.240085668516, 0.233491598424,
    0.222272777438, 0.207702036709, 0.19136328716, 0.174634491826, 0.158520950273, 0.143845376114,
    0.131125126215, 0.120699579138, 0.112627664783, 0.10695401184, 0.103731042739, 0.103011245841,
    0.104899363507, 0.109631960116, 0.117570260349, 0.129221493179, 0.145230856637, 0.166538142348,
    0.194130577455, 0.229085105859, 0.272587881121, 0.325448900354, 0.388020982568, 0.459839197691,
    0.539494156472, 0.623706789147, 0.708690659558, 0.789296128386, 0.86025503692, 0.917359598312,
    0.95678545856, 0.977214324945, 0.97872493685, 0.96330744907, 0.933028195408, 0.891191024506,
    0.840681558801, 0.784847873151, 0.725984014352, 0.666884854675, 0.130782583719, 0.146233948072,
    0.163808302132, 0.182482092384, 0.200579500381, 0.216345332425, 0.227933849518, 0.234157602071,
    0.234395758326, 0.229028898599, 0.218798106985, 0.205320606607, 0.189925074646, 0.17402131261,
    0.158797639053, 0.144863849309, 0.132840898929, 0.122954204978, 0.115309802528, 0.110020703516,
    0.107031144977, 0.10641633251, 0.108388866897, 0.113061794601, 0.120795792279, 0.132074077012,
    0.147534197679, 0.167939188977, 0.194350088022, 0.22753270251, 0.268805253039, 0.318764031005,
    0.377733816613, 0.445234799772, 0.519623597003, 0.598234212965, 0.676920538228, 0.75136177223,
    0.81649905522, 0.86794435718, 0.903174554542, 0.920476794231, 0.91987034957, 0.903480846638,
    0.873368129557, 0.832444435585, 0.783295623674, 0.729433086354, 0.672588803209, 0.615093081291,
    0.117970511266, 0.132783197387, 0.150028121594, 0.168573809578, 0.187015060931, 0.203452545038,
    0.216170170542, 0.223795016683, 0.225602257881, 0.221824227584, 0.213324556787, 0.201410774104,
    0.18748980924, 0.172953738643, 0.158857014109, 0.145932870877, 0.134692885019, 0.125407983347,
    0.118233117807, 0.113176467512, 0.110324039569, 0.109724283243, 0.111446956244, 0.115742184278,
    0.122862787203, 0.133302539956, 0.147551868744, 0.166354819491, 0.190543866259, 0.221017074942,
    0.258639620553, 0.304172676079, 0.35775513055, 0.418853834606, 0.485940948022, 0.5564300845,
    0.626820419592, 0.692874119227, 0.749678247762, 0.79426675362, 0.823255712612, 0.836121627916,
    0.832827467551, 0.815066615154, 0.785017746682, 0.745535274471, 0.69926897889, 0.648227549264,
    0.595113941768, 0.541888439771, 0.105334584338, 0.11913107954, 0.135425899677, 0.153323425063,
    0.171483725885, 0.188155478417, 0.201614611446, 0.210539754777, 0.214091513705, 0.212241060526,
    0.2058890071, 0.196058655664, 0.184111876371, 0.171321659761, 0.158722768053, 0.147038465963,
    0.136747913025, 0.128173655795, 0.121416191918, 0.116601899679, 0.11375233078, 0.112910291894,
    0.114251608074, 0.117895659241, 0.124127080645, 0.133295012067, 0.145942773766, 0.162654280819,
    0.184125020489, 0.211132691202, 0.244458576932, 0.284625820942, 0.331799910362, 0.385364091703,
    0.444139122337, 0.505390600701, 0.56614507753, 0.622373231119, 0.670168559986, 0.706450411474,
    0.728735020486, 0.73630885848, 0.729738337163, 0.710739392424, 0.680978987664, 0.643471382218,
    0.599982318486, 0.553441412694, 0.505475693686, 0.457915137287, 0.0932473333363, 0.105774197059,
    0.120791822933, 0.137558883227, 0.154915946537, 0.171307027025, 0.185160175395, 0.195068024795,
    0.200271821541, 0.20059873668, 0.196596582737, 0.18923596132, 0.179667409728, 0.169049565057,
    0.158291263608, 0.148094893588, 0.138951028293, 0.131144742808, 0.124906416598, 0.120315741363,
    0.117386328865, 0.116245554951, 0.116989679115, 0.119796012809, 0.124918293778, 0.132627788386,
    0.143383377935, 0.157726742902, 0.176229721559, 0.199597307901, 0.228388984283, 0.263030033186,
    0.303568503388, 0.349443357834, 0.399473092828, 0.451200178137, 0.501943213567, 0.548388947042,
    0.586681862111, 0.614414978051, 0.629902457104, 0.632503320908, 0.622683598518, 0.602191676101,
    0.57322399749, 0.537589837411, 0.498034193855, 0.456296644692, 0.414273986758, 0.373166969842,
    0.0820681645269, 0.0932040384905, 0.10670558001, 0.122014293034, 0.138125004152, 0.153762188525,
    0.167550236214, 0.178145404266, 0.184771900781, 0.187183106369, 0.185698773751, 0.181013257459,
    0.174122243458, 0.165899521965, 0.157265443345, 0.148849138861, 0.141061630037, 0.134239645053,
    0.128587477748, 0.124202984724, 0.121199931516, 0.119718757283, 0.119816537102, 0.121684039717,
    0.125578668421, 0.13175130161, 0.140613537122, 0.152594888747, 0.168180002351, 0.187935797032,
    0.212308675106, 0.241642060586, 0.275858540975, 0.314384045658, 0.356076272587, 0.398730469815,
    0.440000985403, 0.47674197687, 0.506211052206, 0.526043476419, 0.535001500632, 0.532822715476,
    0.520323288468, 0.499018321749, 0.470905694844, 0.438013063164, 0.402401407848, 0.365773020006,
    0.329735944467, 0.295247617369, 0.0720818376849, 0.0817716758456, 0.09367655626, 0.107273672701,
    0.121889629397, 0.136408203478, 0.14965589275, 0.160545984947, 0.168286933323, 0.172531038661,
    0.173416210577, 0.171417127458, 0.16726883141, 0.161707671169, 0.155433215392, 0.148983763712,
    0.14275463879, 0.137097976119, 0.132165316131, 0.128133257794, 0.125127736241, 0.123294040318,
    0.122768519137, 0.1237183454, 0.126393645581, 0.131098445905, 0.138147084223, 0.147857292236,
    0.160758436733, 0.17726591968, 0.197668773652, 0.22220526539, 0.250709920207, 0.282615080664,
    0.316638807502, 0.351060719003, 0.383630788441, 0.411809268736, 0.433162465566, 0.445912687167,
    0.449212034768, 0.443070511456, 0.428461661778, 0.406842172198, 0.380155722391, 0.350165558663,
    0.318654596471, 0.28713839121, 0.256669713647, 0.228396911521, 0.0633183404713, 0.0716248164464,
    0.0818917438181, 0.0938006484181, 0.106715677509, 0.119863859085, 0.132259731495, 0.143056548676,
    0.151433897525, 0.157101725005, 0.160045665555, 0.160550578517, 0.159123719282, 0.156203026211,
    0.152363273356, 0.148071132722, 0.143618731809, 0.139318039153, 0.135343311641, 0.131814108429,
    0.128964101838, 0.126902800827, 0.125837786593, 0.125972251768, 0.127580546442, 0.13091987722,
    0.136311471044, 0.144111271539, 0.154675707133, 0.168326096399, 0.185266267797, 0.205605778127,
    0.229099695102, 0.255122404296, 0.282464164188, 0.309703292026, 0.334587741795, 0.355124552482,
    0.369439600449, 0.376141900292, 0.374781861648, 0.365678035699, 0.349683467058, 0.328416736578,
    0.303497538889, 0.276541245998, 0.24898357885, 0.222216253251, 0.196977803033, 0.17391822493,
    0.0558137953299, 0.0628698799482, 0.0716147483192, 0.0817989514089, 0.0930281833589, 0.104633171069,
    0.115927381073, 0.126192217515, 0.13482520798, 0.141459846169, 0.146006518491, 0.148617680814,
    0.149560985035, 0.149180549367, 0.14781773131, 0.145739082409, 0.143225328921, 0.140494920959,
    0.137659643128, 0.134888360625, 0.132386531672, 0.130303331791, 0.128890775226, 0.128455365499,
    0.129188393352, 0.131400649518, 0.135474549759, 0.14161891807, 0.150213515942, 0.161417065269,
    0.175435595457, 0.192228500213, 0.211456273465, 0.232434030628, 0.254126810211, 0.274960233994,
    0.293255175966, 0.307331747405, 0.315689064382, 0.317544422534, 0.312481909181, 0.301134944654,
    0.284490088443, 0.264015773652, 0.241082308563, 0.217097402311, 0.193378926968, 0.170793545406,
    0.150009815438, 0.131429116969, 0.0495559947817, 0.0554730032922, 0.0628343893282, 0.0714483401589,
    0.0810211726799, 0.0910613041404, 0.101073349798, 0.110513855042, 0.118952652649, 0.126042626172,
    0.131711956687, 0.135918627133, 0.138853332242, 0.140673622664, 0.14155915784, 0.141686014228,
    0.141188295807, 0.14014231864, 0.138675552614, 0.136920428268, 0.135055002044, 0.133284004323,
    0.131860433062, 0.131066824903, 0.131229697018, 0.132672432509, 0.135709031172, 0.140569742114,
    0.147548186668, 0.156818557509, 0.168413749781, 0.182215323846, 0.197744972883, 0.21445618976,
    0.231178187158, 0.246643233966, 0.259361034619, 0.2679628841, 0.271487617141, 0.269293747483,
    0.261532323062, 0.248732443274, 0.23200780724, 0.21258012879, 0.191720005307, 0.170603063754,
    0.150264907342, 0.131267428295, 0.114203961656, 0.0992577484972, 0.0444299335674, 0.0493881320909,
    0.0555272417245, 0.0627333595688, 0.0707504681734, 0.0792868890483, 0.0879426280225, 0.0963543347629,
    0.104233435199, 0.111331081456, 0.117541390288, 0.122832758955, 0.127233860761, 0.130849550354,
    0.133656005984, 0.135794517271, 0.137196669051, 0.137911537503, 0.13803070848, 0.137499212885,
    0.136594778634, 0.135464810123, 0.134388037164, 0.133657484683, 0.13364541385, 0.134641678182,
    0.137004581064, 0.14096866343, 0.14674449735, 0.15445035808, 0.164031667841, 0.175267492768,
    0.187744957214, 0.200708624137, 0.21319504835, 0.224049768778, 0.232006706675, 0.236155259457,
    0.235640943753, 0.230454027437, 0.220595174315, 0.206948564025, 0.190491833769, 0.17234483962,
    0.153509219357, 0.134977857089, 0.117500513632, 0.101575791923, 0.0875217815663, 0.0754578470384,
    0.0403483652741, 0.0444889155046, 0.0495826435986, 0.0555456110678, 0.0621831135087, 0.0692980585718,
    0.0766287411886, 0.0839149070521, 0.091008397464, 0.097705267056, 0.103981961358, 0.109774864632,
    0.115093890831, 0.119947890306, 0.124277141153, 0.128084374574, 0.13127983005, 0.133712138026,
    0.135436066464, 0.136419610317, 0.136755117745, 0.13660607063, 0.13625718322, 0.13601480499,
    0.136233376358, 0.137223457229, 0.139314602549, 0.142727445637, 0.147692551101, 0.154177398127,
    0.162139610384, 0.171256821984, 0.181032093712, 0.190812622935, 0.19961787283, 0.206486484526,
    0.210500332525, 0.210815375165, 0.207132199687, 0.199470041242, 0.188330400623, 0.174244031721,
    0.158272501431, 0.141370246036, 0.124397657651, 0.108111206012, 0.093079734329, 0.079646591694,
    0.0679850403944, 0.0581480472714, 0.0372199690445, 0.0406861001226, 0.0449000593987, 0.0497935396561,
    0.0552375564509, 0.0610472464794, 0.0671130026812, 0.0732752748716, 0.0794089782092, 0.0854593342514,
    0.0913979811268, 0.0972300321107, 0.102917824508, 0.108487091944, 0.113826467645, 0.118906615818,
    0.123524404756, 0.127586279816, 0.130902465367, 0.133480683458, 0.135292922841, 0.136470587358,
    0.137285671816, 0.137955591983, 0.138817922961, 0.140237252649, 0.142450087865, 0.145726215264,
    0.150204828355, 0.155840796347, 0.162495736911, 0.169831843175, 0.177306914829, 0.184245696951,
    0.189853856408, 0.193339300863, 0.193872368993, 0.191088841511, 0.184871403244, 0.175339636347,
    0.163125961308, 0.148937949512, 0.133553769103, 0.117888920567, 0.102555724943, 0.0881687038312,
    0.0751444094898, 0.0636676562035, 0.0538706151491, 0.0457183771487, 0.0349739911598, 0.0378865171828,
    0.0413678959662, 0.045361617601, 0.0497520196437, 0.0544545725874, 0.0593548762093, 0.064390920114,
    0.0695122817263, 0.0747201990973, 0.080077281409, 0.0855703073642, 0.091247522641, 0.0970414801003,
    0.102928715045, 0.108805357733, 0.114495100894, 0.119831368186, 0.12464246775, 0.128787715497,
    0.132251266731, 0.134982690244, 0.137222417611, 0.139192427991, 0.141146544541, 0.143421894626,
    0.146177135336, 0.149714294809, 0.154034578077, 0.159122545097, 0.164754138153, 0.170615426952,
    0.176068375071, 0.180567270267, 0.183288563848, 0.183790572911, 0.181392826915, 0.17599898921,
    0.16766022577, 0.156780205561, 0.143893873554, 0.129711992463, 0.11495596706, 0.10033464216,
    0.0864157405394, 0.0735569761427, 0.0620818238051, 0.0521692772502, 0.0437981035281, 0.0369002889683,
    0.0335361596688, 0.0360055855427, 0.0388800353592, 0.0421125913823, 0.0456201503672, 0.049326686831,
    0.0531899324898, 0.0571780798703, 0.0613357161343, 0.0656601592484, 0.0702706703973, 0.0751673592141,
    0.0804594252269, 0.0861209173977, 0.0921224196344, 0.0984044397054, 0.104777717939, 0.111065341925,
    0.117087798789, 0.122649755847, 0.127700925229, 0.132146825302, 0.136082172666, 0.139682880304,
    0.143054872937, 0.146523317408, 0.150274495879, 0.15440567945, 0.158956138086, 0.163850145387,
    0.168747515848, 0.173333869574, 0.177041640778, 0.179304432749, 0.17959734277, 0.177384635201,
    0.172513360893, 0.164874420313, 0.154862814967, 0.1428662857, 0.129500714174, 0.115426175002,
    0.101245642763, 0.0874938598457, 0.0746657178671, 0.0630406944457, 0.0528068463037, 0.0440373803732,
    0.0367120946046, 0.0307513608009, 0.0328842468939, 0.0349899288372, 0.0373869999451, 0.0399787231592,
    0.0427356912798, 0.0455941063683, 0.0485147814448, 0.0515767100203, 0.0547754619428, 0.0582262491434,
    0.0620403188059, 0.0662326878915, 0.0709553040648, 0.0761885366421, 0.0820176134407, 0.0883265658208,
    0.0949747852265, 0.101883115844, 0.10881491147, 0.115614858299, 0.122097607997, 0.128221400707,
    0.133895490234, 0.139259595108, 0.144381033507, 0.149417775872, 0.154438333545, 0.159536004098,
    0.164608237216, 0.169614969118, 0.174039074247, 0.177629860284, 0.179819139258, 0.18014127312,
    0.1782076702, 0.173719566157, 0.1666302512, 0.157165492723, 0.145767793685, 0.132865525894,
    0.119139506466, 0.10514679054, 0.0914318262347, 0.0784109903584, 0.0664292987835, 0.0557084045804,
    0.0463723922891, 0.0384367736241, 0.0318728923732, 0.0265705453992, 0.0329986453361, 0.0348379293338,
    0.0368297995755, 0.0389019729724, 0.0409983490656, 0.0430990493094, 0.0452332342296, 0.0474228837764,
    0.0497902639634, 0.0524076306954, 0.0553976868742, 0.0588795599367, 0.062923743143, 0.0676395684365,
    0.0730316545361, 0.0790950356161, 0.0857785768807, 0.0929718409453, 0.100508986237, 0.108207885848,
    0.11593880875, 0.123551991919, 0.130935493153, 0.138110859315, 0.145095176867, 0.151865028231,
    0.15845033311, 0.164778059734, 0.170715061437, 0.176002049908, 0.180307796068, 0.183167721083,
    0.184096254693, 0.182730294293, 0.178870827304, 0.172406183537, 0.163455232765, 0.152388956991,
    0.139839825071, 0.126237840355, 0.112191989923, 0.0982573765139, 0.0848594485135, 0.0723422979489,
    0.0609561861035, 0.0508814371213, 0.0421700920823, 0.0348110651304, 0.0287613040149, 0.0238927553961,
    0.0338967513998, 0.0355439823771, 0.037217858645, 0.038844471209, 0.0403732598134, 0.041828225332,
    0.0432301428435, 0.0446769592762, 0.046269870751, 0.0481127851525, 0.0503579625105, 0.0531045244846,
    0.0565041438749, 0.0606003534433, 0.065490796654, 0.0711753125816, 0.0776872769447, 0.0849141762753,
    0.0927356369007, 0.101084528192, 0.109761094745, 0.118618034593, 0.127559877879, 0.13648318376,
    0.145281754488, 0.153852273024, 0.162149413029, 0.169930771134, 0.17698398823, 0.182878695948,
    0.187272405986, 0.189619254296, 0.189550845065, 0.186832612827, 0.181332167762, 0.173128647692,
    0.162623706824, 0.150269062705, 0.1366792472, 0.122481924047, 0.108159823807, 0.0942121667319,
    0.0809863798808, 0.0687937217216, 0.0577973982865, 0.0481105259931, 0.0397803431404, 0.0327742914026,
    0.0270226873049, 0.0224074472427, 0.0356264306926, 0.037156127873, 0.0385783577396, 0.0398230411733,
    0.0408520798438, 0.0417205450564, 0.0424734679012, 0.0432295683716, 0.0441144371425, 0.0452685276628,
    0.0468288543404, 0.0489281718731, 0.0516821810469, 0.0551951427625, 0.0595588884517, 0.0648033385996,
    0.0710070386716, 0.0780856865759, 0.0860214026228, 0.0947305362208, 0.104095451509, 0.113935486936,
    0.124179017289, 0.134651525377, 0.145145037064, 0.155547401776, 0.165548434832, 0.174872627199,
    0.183137028741, 0.189844243217, 0.194505565712, 0.196648778593, 0.195901264782, 0.19206435583,
    0.185268843277, 0.175680971232, 0.163895297197, 0.150460102124, 0.136082447525, 0.121292561532,
    0.106709899502, 0.0926781528148, 0.0795183765723, 0.0674447888084, 0.0566241862231, 0.0471065503418,
    0.038944324093, 0.0320844700832, 0.0264480710176, 0.0219342220495, 0.0382506229969, 0.0397597315304,
    0.0409934783718, 0.0419055803706, 0.0424956428935, 0.0428150350341, 0.0429618294039, 0.0430731863744,
    0.0433168508153, 0.0438306352005, 0.0447711367555, 0.0462745706388, 0.0484543678034, 0.0514292739647,
    0.0552801382927, 0.0600953550951, 0.0659234667594, 0.0727896128562, 0.0807014857034, 0.0895998073808,
    0.0993873614204, 0.10999734234, 0.121251221907, 0.132995360881, 0.144985941073, 0.157017873162,
    0.168692774538, 0.179513186296, 0.189077170577, 0.196683790158, 0.201898440717, 0.204042051066,
    0.202869251167, 0.198319131511, 0.190476784081, 0.179841804639, 0.167072831011, 0.15275449253,
    0.13771921349, 0.122495400286, 0.107628798263, 0.0934258881948, 0.0802107409701, 0.0681092543553,
    0.0572737559401, 0.0477354526303, 0.039536312716, 0.0326296581574, 0.0269545337666, 0.0223967190981,
    0.041878215318, 0.0434321927869, 0.0445532568486, 0.045204440976, 0.0453757570289, 0.0451701905464,
    0.0447282971139, 0.0442269675261, 0.0438654423943, 0.0437751696853, 0.0441544831585, 0.0451203583451,
    0.0467926986874, 0.0492686082225, 0.0526994575031, 0.0571054053655, 0.0625908042152, 0.0692240224706,
    0.0770064982048, 0.0859486942635, 0.0960366850748, 0.107148310013, 0.119182021379, 0.131958121326,
    0.145189051112, 0.158600080547, 0.171686445023, 0.183993110818, 0.194737856231, 0.203398391384,
    0.20915746276, 0.211543563504, 0.210218740822, 0.205169588758, 0.19670389465, 0.185388683123,
    0.171903239581, 0.157025323514, 0.141485595403, 0.125888250105, 0.11072802993, 0.096352795243,
    0.0829600647142, 0.0706874616116, 0.0596730898794, 0.0499466805563, 0.0415381423805, 0.0344193947116,
    0.0285392587184, 0.0238083831382, 0.0465922181957, 0.0482966728015, 0.0493862606534, 0.0498024580138,
    0.049606697359, 0.0489050050525, 0.0478771921277, 0.0467635630121, 0.0457837365502, 0.0451374390888,
    0.0449676186415, 0.0454494280876, 0.0466641847009, 0.0487393528314, 0.0517708451535, 0.0558399427142,
    0.0610477670149, 0.0674503668766, 0.0751322017832, 0.0840757426672, 0.0943286672552, 0.105766891392,
    0.118353444465, 0.131875267112, 0.146083236794, 0.160598588533, 0.174873952274, 0.188372984917,
    0.200222477667, 0.209788728398, 0.216211967654, 0.218911781579, 0.217743481706, 0.21259086993,
    0.203812265877, 0.192094324459, 0.178170980731, 0.16294642061, 0.147126401254, 0.131301672827,
    0.115937943757, 0.101343931201, 0.087728397406, 0.0751960270798, 0.0638677637154, 0.0537790506144,
    0.0450033961568, 0.0375230968165, 0.0312901394805, 0.0262329744119, 0.0524950718452, 0.0544560080861,
    0.0556027373427, 0.0558614634136, 0.0553005685225, 0.0541095917063, 0.0525223837901, 0.0507895561092,
    0.0492111449252, 0.0479791488617, 0.0472980737204, 0.0473103322972, 0.0481109804167, 0.0498375376057,
    0.0525466374771, 0.0563562268369, 0.0613206192732, 0.0675726603646, 0.0751272245572, 0.0840586337431,
    0.0944042146385, 0.106100806427, 0.119046187869, 0.133086356176, 0.147967260039, 0.163262984838,
    0.178453122227, 0.19283955442, 0.20558327586, 0.215899974025, 0.222961447508, 0.226161213911,
    0.225200750177, 0.220144551841, 0.211387914952, 0.199604476083, 0.185684094369, 0.170395877597,
    0.154468510507, 0.138611698209, 0.123144932537, 0.108379315799, 0.0945125053905, 0.0816695952589,
    0.0699210068889, 0.0593828657078, 0.050093928506, 0.0420787286448, 0.0353565073075, 0.0298587323744,
    0.0596496823451, 0.0619886310018, 0.0632837541901, 0.0634659102615, 0.0626153453015, 0.0609513974854,
    0.0587775212621, 0.0564331289571, 0.0542256353703, 0.052418424873, 0.0512156538666, 0.0507896281831,
    0.0512282079681, 0.0526257984344, 0.0550869226109, 0.0586800757111, 0.0634878302793, 0.0696178684912,
    0.0771237175858, 0.0860583261775, 0.0964581552407, 0.108285726857, 0.121470070688, 0.13583777106,
    0.151131552657, 0.166908430689, 0.182653431587, 0.197553292446, 0.210933679515, 0.221783058001,
    0.229319999881, 0.23302684379, 0.232352018657, 0.227588593087, 0.219171291192, 0.207698313045,
    0.194009473279, 0.178981102877, 0.163294192862, 0.147553335082, 0.13213781104, 0.117359063209,
    0.103295884778, 0.0901358459428, 0.0779706794354, 0.0668713021367, 0.0569758992958, 0.0483159185395,
    0.0409533851805, 0.0348652232979, 0.0680638726478, 0.0709344071411, 0.0724852123331, 0.0726590529595,
    0.0715664540098, 0.0694652125014, 0.0667258989631, 0.0637922633465, 0.0609613446206, 0.0585774349717,
    0.0568704094802, 0.055993042487, 0.0560730434299, 0.057190805545, 0.0594384516859, 0.0628716468614,
    0.0676093225444, 0.0736730277281, 0.0811604353928, 0.0900809064105, 0.100539028171, 0.112425562296,
    0.125674870989, 0.140152331757, 0.155623369578, 0.171538550464, 0.187524595701, 0.202616703448,
    0.216254656295, 0.22734440612, 0.235249199969, 0.239175237035, 0.239030254604, 0.23473757823,
    0.226797948541, 0.215885250796, 0.202751550155, 0.188284037819, 0.173142073551, 0.157808897739,
    0.142733360291, 0.128074373508, 0.114017734696, 0.10065410114, 0.0880554279114, 0.0764482218316,
    0.0658515332926, 0.0564527797479, 0.0483336565078, 0.0415344014892, 0.0777088844003, 0.0811935951222,
    0.0831077783434, 0.0833701593088, 0.0820987401264, 0.0796290257253, 0.0764014277594, 0.0728569273451,
    0.0694434768663, 0.0665043540589, 0.0642813940271, 0.0629888616815, 0.0627372687923, 0.0636251692053,
    0.0656859078081, 0.0690219339269, 0.0736857712976, 0.0797288279187, 0.0872227440666, 0.0961752328797,
    0.106605965942, 0.118481182849, 0.131690304682, 0.146113565258, 0.161379969513, 0.177212505882,
    0.192941784991, 0.207976766889, 0.221411163676, 0.232492472848, 0.240368656262, 0.244607807499,
    0.244801874217, 0.241052983282, 0.233782475327, 0.223647037741, 0.211434115617, 0.197843223287,
    0.183547355837, 0.169017641981, 0.154515927634, 0.140327706801, 0.126483137165, 0.113116294278,
    0.100266948158, 0.0881450386752, 0.076888345793, 0.0666834509627, 0.0577208219454, 0.0501095759897,
    0.0884600892623, 0.0926293539417, 0.0949608491312, 0.0953692869623, 0.0940106758626, 0.0912661957859,
    0.087605679536, 0.0835235910997, 0.0795529218046, 0.0761080092267, 0.0734259080619, 0.0717544309428,
    0.0712093355655, 0.0718749070818, 0.0738117186188, 0.0770763695177, 0.0816905713237, 0.0877718700376,
    0.0952377506332, 0.104165520318, 0.114513600221, 0.126240827842, 0.139264612029, 0.15335814019,
    0.168251754642, 0.183639724453, 0.198843825866, 0.213338783243, 0.226298675736, 0.23693838217,
    0.244695488184, 0.248867068697, 0.249289352962, 0.246091230254, 0.23959456226, 0.230501942453,
    0.219380941361, 0.206952383078, 0.193918279719, 0.180516756477, 0.167036591231, 0.153636179649,
    0.140373532875, 0.127274901204, 0.114390800856, 0.101952142954, 0.0900963209223, 0.0791522120711,
    0.0693141451077, 0.0607914183153, 0.100120861807, 0.104945844324, 0.107698470402, 0.108291621263,
    0.106900836398, 0.103914818514, 0.0998987768556, 0.0954216150446, 0.0910276131987, 0.0871273952179,
    0.0840668267974, 0.0820634339556, 0.0812844776113, 0.0817650470467, 0.0835938062564, 0.086795418713,
    0.0914260995355, 0.0974132803948, 0.104875872272, 0.113681386676, 0.123857656725, 0.135329274839,
    0.147896578806, 0.161482783942, 0.17573182413, 0.190300566264, 0.204666227231, 0.218231826225,
    0.230396514853, 0.240328734413, 0.247559166467, 0.251447048518, 0.252012879754, 0.249336414456,
    0.243743898833, 0.235636874262, 0.225899816361, 0.215008583136, 0.203407441188, 0.191578474611,
    0.179515934433, 0.16738136309, 0.15507398596, 0.142687825386, 0.130138627368, 0.117643028649,
    0.105375127378, 0.093767256049, 0.0830810117543, 0.0736374477456, 0.112444761991, 0.117781076248,
    0.12085221051, 0.12157047222, 0.120132269602, 0.116982728472, 0.112692046451, 0.107878746621,
    0.103172739771, 0.0989802119607, 0.0956266259228, 0.0934030730342, 0.09242682583, 0.0928080711602,
    0.0945469330486, 0.0977108718043, 0.102282037906, 0.108229274793, 0.115513391187, 0.124131228741,
    0.133995652378, 0.144976267694, 0.156944998686, 0.169743887058, 0.183040006527, 0.196496714645,
    0.209726461247, 0.222134354464, 0.233103929009, 0.242078879974, 0.248482518371, 0.251992627853,
    0.252593599877, 0.250242431564, 0.245404804226, 0.238644174789, 0.230299175691, 0.221094944104,
    0.211403466208, 0.201355170214, 0.191131460989, 0.180762026628, 0.169875756861, 0.158585768566,
    0.146809980646, 0.134592157195, 0.122275507712, 0.110140793558, 0.0987296922787, 0.0884249544049,
    0.125113537124, 0.130716875062, 0.133843653538, 0.134510358516, 0.132960534054, 0.129605179013,
    0.125121652145, 0.120145947663, 0.11518946224, 0.110809175099, 0.107305536955, 0.104924504359,
    0.103886171683, 0.104163746606, 0.105864138086, 0.108955196992, 0.113443089959, 0.119223442287,
    0.126309959963, 0.13455358933, 0.143905239655, 0.154269193332, 0.165405243141, 0.17717789875,
    0.189368434641, 0.201506158353, 0.213271712578, 0.22422682913, 0.233839917236, 0.241600238199,
    0.247051472683, 0.250012333557, 0.250328132129, 0.248334451423, 0.244229275108, 0.238605881835,
    0.231870179091, 0.224529992247, 0.21682277451, 0.2089293194, 0.20099549479, 0.192607320425,
    0.183733371175, 0.174065206223, 0.163414195923, 0.151983101017, 0.139886720569, 0.127559112786,
    0.11557376087, 0.104500648532, 0.137775895574, 0.143248720458, 0.14609686136, 0.1464607452,
    0.144565554455, 0.140964076002, 0.136246626955, 0.131061143785, 0.126002195578, 0.121535254357,
    0.117958653394, 0.11559024971, 0.114488855173, 0.114734335504, 0.116375650982, 0.119414072168,
    0.123699525717, 0.129267649072, 0.135972991584, 0.143772209459, 0.152455715424, 0.161967473665,
    0.172147821662, 0.182696668981, 0.19350397421, 0.204222425012, 0.214463072776, 0.223821911081,
    0.231909584872, 0.238295533312, 0.242669310372, 0.244904926716, 0.245000824851, 0.243178382227,
    0.239802558431, 0.235358556465, 0.230173632764, 0.224652248461, 0.21910933748, 0.213568188371,
    0.208007191411, 0.202059987156, 0.195476301994, 0.187812873183, 0.178846666397, 0.16853480703,
    0.157075073199, 0.144822284274, 0.132516169951, 0.120843603776, 0.150122458426, 0.154960566012,
    0.157119020368, 0.156746796347, 0.154260611896, 0.150199848114, 0.145114898384, 0.139799823154,
    0.134635463621, 0.130111047582, 0.126561540469, 0.124152695811, 0.123054208462, 0.123267784393,
    0.124853014947, 0.127710404519, 0.131816370598, 0.137037500456, 0.143274418006, 0.150457493439,
    0.158402307067, 0.166976165847, 0.176016056136, 0.185319209747, 0.194720621767, 0.20386582657,
    0.21250660118, 0.220293709228, 0.226796721031, 0.231865193649, 0.235122948546, 0.236601802751,
    0.236399011465, 0.23470870589, 0.23191575161, 0.228471892126, 0.224684044701, 0.221020064574,
    0.217671710484, 0.214530004982, 0.211468846999, 0.20809922303, 0.204016028365, 0.198666536155,
    0.191658422713, 0.182833648784, 0.17229955715, 0.160444315979, 0.14803304274, 0.135907711591,
    0.16184566771, 0.165447864027, 0.166366187247, 0.164942583673, 0.161502896078, 0.156698589394,
    0.151217677574, 0.145528906521, 0.140207518745, 0.135613924672, 0.132057648771, 0.129644551721,
    0.128520705894, 0.128683588214, 0.130149680324, 0.132784187819, 0.13658530109, 0.141388771904,
    0.147121598502, 0.153575778348, 0.160675755946, 0.168273824587, 0.17619034765, 0.184245785786,
    0.192257376042, 0.199927662347, 0.207130928308, 0.213362006707, 0.218425611847, 0.222172058704,
    0.224426528281, 0.225182619923, 0.224589720066, 0.222982563958, 0.220702247048, 0.218202676408,
    0.215755183537, 0.213762523624, 0.21238652561, 0.211440388604, 0.210793460785, 0.209991651928,
    0.208419341541, 0.205476066204, 0.200584709036, 0.193386610431, 0.183987916333, 0.172753996689,
    0.160474945788, 0.148076771574, 0.172625586754, 0.174470931707, 0.173719900607, 0.170684656421,
    0.166002785727, 0.160243297577, 0.154049460399, 0.14789212404, 0.142291411947, 0.137589699005,
    0.133925316432, 0.131469235693, 0.130258275376, 0.130296901265, 0.131571624705, 0.133937089038,
    0.137374057194, 0.141692957407, 0.146773995299, 0.152570426688, 0.158819971224, 0.165490502645,
    0.172358821211, 0.179261930795, 0.186003789589, 0.19243688711, 0.19820214709, 0.203120813935,
    0.20694193395, 0.209586661677, 0.210874428097, 0.211015899678, 0.210113913475, 0.208527535651,
    0.206684309254, 0.204965688137, 0.203701633358, 0.203110519537, 0.203427091161, 0.204420857945,
    0.20595277802, 0.207458588415, 0.208163641628, 0.207456036874, 0.204531757787, 0.199079135649,
    0.190871670466, 0.180339973515, 0.168280234503, 0.155792008143, 0.182109353781, 0.181777765131,
    0.178849588715, 0.173956887622, 0.167739498224, 0.160769129427, 0.153731221576, 0.146986714856,
    0.141029547192, 0.136032336075, 0.132221040139, 0.129588874105, 0.12825299147, 0.128070714333,
    0.129056381145, 0.131102028636, 0.134097244404, 0.13789183864, 0.142419096003, 0.147499065158,
    0.153018654812, 0.158803851778, 0.164731632756, 0.170637190386, 0.17635084605, 0.18163760165,
    0.186304629057, 0.190184667289, 0.192949399367, 0.194697510151, 0.195278534616, 0.194826029494,
    0.193744183827, 0.192221766572, 0.190669321506, 0.189530124623, 0.189147838302, 0.189753132435,
    0.191382354197, 0.194001992052, 0.197260082527, 0.200585492195, 0.203304118319, 0.204467317434,
    0.203303311299, 0.199227919637, 0.192158020267, 0.182268576516, 0.170545530714, 0.158018004772,
    0.190116267257, 0.187165385725, 0.181878617933, 0.174870900763, 0.16694265393, 0.158695465571,
    0.150637544196, 0.143255696024, 0.136790308227, 0.131505989769, 0.127387342268, 0.124534191402,
    0.122918197193, 0.122511749667, 0.123166580063, 0.124815746069, 0.127340869459, 0.130678972916,
    0.134613664447, 0.139019587668, 0.143845755468, 0.148909820419, 0.154085688255, 0.159216841764,
    0.164080004655, 0.16854925465, 0.172405668312, 0.175381564712, 0.177358380031, 0.178425648195,
    0.178427719439, 0.177670556149, 0.176385257046, 0.17490953811, 0.173602748038, 0.17298849075,
    0.173226606285, 0.174626661007, 0.177236486323, 0.181002965011, 0.185472950134, 0.190218041463,
    0.194327582774, 0.196893281358, 0.197048637771, 0.194094652859, 0.187838748723, 0.178518971626,
    0.167078541155, 0.154717816018, 0.196294724056, 0.190629736965, 0.182833501609, 0.173717377015,
    0.164003480048, 0.154408040903, 0.145408850494, 0.137271392371, 0.130311476479, 0.124640725539,
    0.120239459793, 0.11710789001, 0.115219260042, 0.114499334501, 0.114820695048, 0.116096025412,
    0.118192978594, 0.121003803257, 0.124392707445, 0.12830838237, 0.132548845349, 0.137014526526,
    0.14157003532, 0.146068040032, 0.15035027326, 0.154133688378, 0.157343828991, 0.159744540033,
    0.161270441748, 0.16178160495, 0.161481649495, 0.160454848965, 0.159059198874, 0.157604960481,
    0.156560890485, 0.156219523595, 0.156864305074, 0.158826168302, 0.162073054008, 0.166495076483,
    0.171735280326, 0.177289035315, 0.182278437685, 0.185727934809, 0.186666491993, 0.184459102892,
    0.178714871066, 0.169872357865, 0.158744014924, 0.146542361109, 0.200549032006, 0.192120338917,
    0.181847652002, 0.170718493915, 0.159390627735, 0.148549749439, 0.138609289369, 0.129831245021,
    0.12242369264, 0.116375533303, 0.111705835752, 0.108343410746, 0.106187196126, 0.105149060878,
    0.105169139913, 0.10603824735, 0.10775622082, 0.110150910097, 0.113115461823, 0.116532290106,
    0.120294410847, 0.12430757379, 0.128423641837, 0.132443505238, 0.136250464323, 0.139644708927,
    0.142454578177, 0.144462220292, 0.145556809497, 0.145845162815, 0.145284086425, 0.144174828236,
    0.142699110489, 0.141367496839, 0.140423964537, 0.140264810044, 0.141204409517, 0.143376959301,
    0.146948209411, 0.151691903713, 0.157298014479, 0.163182189786, 0.168551126192, 0.1723224843,
    0.173620546461, 0.17168572567, 0.166255496028, 0.157685803448, 0.146888196285, 0.135011374293,
    0.202471026067, 0.191622992757, 0.179224847465, 0.166218648931, 0.153523078234, 0.141611870064,
    0.130919788444, 0.121653513585, 0.11384407791, 0.107542997102, 0.102637848624, 0.0990558089677,
    0.0967117665585, 0.0954578696991, 0.0951635148246, 0.0957684348856, 0.0971154280653, 0.0991569948225,
    0.101751514861, 0.104803958365, 0.108183792767, 0.111850116103, 0.115580738366, 0.119313168581,
    0.122847633433, 0.125927877495, 0.128464316992, 0.130261267543, 0.131215267308, 0.131305355168,
    0.130659078735, 0.129484138838, 0.128077452404, 0.126770427926, 0.12591367854, 0.125890652043,
    0.126905184149, 0.12922457973, 0.132839064692, 0.137577555516, 0.143175509827, 0.149030594217,
    0.154330927315, 0.15809564026, 0.159393467679, 0.15745055346, 0.152105224603, 0.143737022064,
    0.13325082522, 0.121837668848, 0.202164623321, 0.189255281533, 0.175028902398, 0.160652328508,
    0.146782131516, 0.134095759654, 0.122863883102, 0.113226605693, 0.105192780424, 0.0987111827248,
    0.0936917964797, 0.0899925487144, 0.087479371612, 0.086058255755, 0.0855794675634, 0.0859604332286,
    0.0870672487699, 0.0888225461381, 0.0911209740332, 0.0938836225061, 0.0970007300083, 0.100407996619,
    0.103892587358, 0.107447514182, 0.11078351419, 0.113744238613, 0.116147070213, 0.11785537616,
    0.118726179668, 0.118796412007, 0.118137286343, 0.11699394478, 0.115603084883, 0.114377245863,
    0.113611178849, 0.113591393742, 0.114664739814, 0.116911488231, 0.120402738533, 0.125030508992,
    0.130387705027, 0.135976554993, 0.140968564804, 0.144409683952, 0.145396020453, 0.143256601762,
    0.137913475821, 0.129656373392, 0.11947782929, 0.108585711511
};

}  // namespace closure
